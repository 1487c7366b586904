#include "pco/formula.hpp"

#include "pco/error.hpp"

namespace pco {

namespace {

std::size_t mix(std::size_t h, std::size_t x) { return h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

}  // namespace

Formula Formula::make(Node node) {
  std::size_t h = mix(0, static_cast<std::size_t>(node.kind));
  node.size = 1;
  node.has_cf = node.kind == Kind::Cf;
  if (node.a) {
    h = mix(h, node.a->hash());
    node.size += node.a->node_count();
    node.has_cf = node.has_cf || node.a->has_counterfactual();
  }
  if (node.b) {
    h = mix(h, node.b->hash());
    node.size += node.b->node_count();
    node.has_cf = node.has_cf || node.b->has_counterfactual();
  }
  switch (node.kind) {
    case Kind::Eq:
    case Kind::Neq:
      h = mix(mix(h, node.var), node.val);
      node.co = true;
      break;
    case Kind::And:
    case Kind::SelImp:
      node.co = node.a->is_co() && node.b->is_co();
      break;
    case Kind::Cf:
      for (const auto& [v, x] : node.spec.pairs()) h = mix(mix(h, v), x);
      node.co = node.b->is_co();
      break;
    case Kind::ProbConst:
      h = mix(mix(h, static_cast<std::size_t>(node.cmp)), node.eps.hash());
      node.co = false;
      break;
    case Kind::ProbProb:
      h = mix(h, static_cast<std::size_t>(node.cmp));
      node.co = false;
      break;
    case Kind::GOr:
      node.co = false;
      break;
  }
  node.hash = h;
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::eq(Var v, Val x) {
  Node n;
  n.kind = Kind::Eq;
  n.var = v;
  n.val = x;
  return make(std::move(n));
}

Formula Formula::neq(Var v, Val x) {
  Node n;
  n.kind = Kind::Neq;
  n.var = v;
  n.val = x;
  return make(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) {
  Node n;
  n.kind = Kind::And;
  n.a = std::make_shared<const Formula>(std::move(a));
  n.b = std::make_shared<const Formula>(std::move(b));
  return make(std::move(n));
}

Formula Formula::gor(Formula a, Formula b) {
  Node n;
  n.kind = Kind::GOr;
  n.a = std::make_shared<const Formula>(std::move(a));
  n.b = std::make_shared<const Formula>(std::move(b));
  return make(std::move(n));
}

Formula Formula::sel(Formula antecedent, Formula consequent) {
  if (!antecedent.is_co()) throw Error(ErrorCode::NotCoFormula, "antecedent of ⊃ must be a CO formula");
  Node n;
  n.kind = Kind::SelImp;
  n.a = std::make_shared<const Formula>(std::move(antecedent));
  n.b = std::make_shared<const Formula>(std::move(consequent));
  return make(std::move(n));
}

Formula Formula::cf(InterventionSpec spec, Formula body) {
  Node n;
  n.kind = Kind::Cf;
  n.spec = std::move(spec);
  n.b = std::make_shared<const Formula>(std::move(body));
  return make(std::move(n));
}

Formula Formula::prob(Formula alpha, Cmp cmp, Rational threshold) {
  if (!alpha.is_co()) throw Error(ErrorCode::NotCoFormula, "argument of Pr must be a CO formula");
  if (!threshold.in_unit_interval())
    throw Error(ErrorCode::IllTypedArgument, "threshold " + threshold.str() + " is outside [0,1]");
  Node n;
  n.kind = Kind::ProbConst;
  n.cmp = cmp;
  n.eps = std::move(threshold);
  n.a = std::make_shared<const Formula>(std::move(alpha));
  return make(std::move(n));
}

Formula Formula::prob_cmp(Formula alpha, Cmp cmp, Formula beta) {
  if (!alpha.is_co() || !beta.is_co()) throw Error(ErrorCode::NotCoFormula, "arguments of Pr must be CO formulas");
  Node n;
  n.kind = Kind::ProbProb;
  n.cmp = cmp;
  n.a = std::make_shared<const Formula>(std::move(alpha));
  n.b = std::make_shared<const Formula>(std::move(beta));
  return make(std::move(n));
}

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.size != b.size) return false;
  switch (a.kind) {
    case Kind::Eq:
    case Kind::Neq:
      return a.var == b.var && a.val == b.val;
    case Kind::And:
    case Kind::GOr:
    case Kind::SelImp:
      return *a.a == *b.a && *a.b == *b.b;
    case Kind::Cf:
      return a.spec == b.spec && *a.b == *b.b;
    case Kind::ProbConst:
      return a.cmp == b.cmp && a.eps == b.eps && *a.a == *b.a;
    case Kind::ProbProb:
      return a.cmp == b.cmp && *a.a == *b.a && *a.b == *b.b;
  }
  return false;
}

void check_formula(const Signature& sig, const Formula& phi) {
  switch (phi.kind()) {
    case Kind::Eq:
    case Kind::Neq:
      if (phi.var() >= sig.size()) throw Error(ErrorCode::RangeViolation, "formula names an unknown variable");
      if (phi.val() >= sig.range_size(phi.var()))
        throw Error(ErrorCode::RangeViolation, "formula value out of range for " + sig.name(phi.var()));
      return;
    case Kind::And:
    case Kind::GOr:
    case Kind::SelImp:
    case Kind::ProbProb:
      check_formula(sig, phi.left());
      check_formula(sig, phi.right());
      return;
    case Kind::Cf:
      check_spec(sig, phi.spec());
      check_formula(sig, phi.body());
      return;
    case Kind::ProbConst:
      check_formula(sig, phi.arg());
      return;
  }
}

}  // namespace pco
