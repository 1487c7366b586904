#include "pco/semantics.hpp"

#include "pco/error.hpp"

namespace pco {

namespace {

bool at(const Assignment& s, const FunctionComponent& laws, const Formula& a) {
  switch (a.kind()) {
    case Kind::Eq:
      return s[a.var()] == a.val();
    case Kind::Neq:
      return s[a.var()] != a.val();
    case Kind::And:
      return at(s, laws, a.left()) && at(s, laws, a.right());
    case Kind::SelImp:
      return !at(s, laws, a.antecedent()) || at(s, laws, a.consequent());
    case Kind::Cf: {
      if (!a.spec().consistent()) return true;
      return at(apply_intervention(s, laws, a.spec()), laws.restricted(a.spec().mask()), a.body());
    }
    default:
      throw Error(ErrorCode::NotCoFormula, "probabilistic formula evaluated at a single assignment");
  }
}

std::uint64_t count_rows(const CausalMultiteam& model, const Formula& alpha) {
  std::uint64_t n = 0;
  for (const auto& [s, k] : model.team().rows())
    if (at(s, model.laws(), alpha)) n += k;
  return n;
}

bool all_rows(const CausalMultiteam& model, const Formula& alpha) {
  for (const auto& [s, k] : model.team().rows())
    if (!at(s, model.laws(), alpha)) return false;
  return true;
}

CausalMultiteam filter(const CausalMultiteam& model, const Formula& alpha) {
  Multiteam kept;
  for (const auto& [s, k] : model.team().rows())
    if (at(s, model.laws(), alpha)) kept.add(s, k);
  return CausalMultiteam::assume_valid(std::move(kept), model.laws());
}

bool compare(const mpq_class& lhs, Cmp cmp, const mpq_class& rhs) { return cmp == Cmp::Ge ? lhs >= rhs : lhs > rhs; }

bool eval(const CausalMultiteam& model, const Formula& phi) {
  switch (phi.kind()) {
    case Kind::Eq:
    case Kind::Neq:
      return all_rows(model, phi);
    case Kind::And:
      return eval(model, phi.left()) && eval(model, phi.right());
    case Kind::GOr:
      return eval(model, phi.left()) || eval(model, phi.right());
    case Kind::SelImp:
      return eval(filter(model, phi.antecedent()), phi.consequent());
    case Kind::Cf:
      if (!phi.spec().consistent()) return true;
      if (phi.is_co()) return all_rows(model, phi);
      return eval(intervene(model, phi.spec()), phi.body());
    case Kind::ProbConst: {
      if (model.empty()) return true;
      mpq_class p(mpz_class(count_rows(model, phi.arg())), mpz_class(model.size()));
      p.canonicalize();
      return compare(p, phi.cmp(), phi.threshold().value());
    }
    case Kind::ProbProb: {
      if (model.empty()) return true;
      // same denominator on both sides, so counts compare directly
      const auto a = count_rows(model, phi.arg());
      const auto b = count_rows(model, phi.arg2());
      return phi.cmp() == Cmp::Ge ? a >= b : a > b;
    }
  }
  return false;
}

void require_co(const Formula& alpha) {
  if (!alpha.is_co()) throw Error(ErrorCode::NotCoFormula, "expected a CO formula");
}

}  // namespace

bool eval_co_at(const Assignment& s, const FunctionComponent& laws, const Formula& alpha) {
  require_co(alpha);
  check_formula(laws.signature(), alpha);
  check_assignment(laws.signature(), s);
  return at(s, laws, alpha);
}

bool eval_co(const CausalMultiteam& model, const Formula& alpha) {
  require_co(alpha);
  check_formula(model.signature(), alpha);
  return all_rows(model, alpha);
}

std::uint64_t count(const CausalMultiteam& model, const Formula& alpha) {
  require_co(alpha);
  check_formula(model.signature(), alpha);
  return count_rows(model, alpha);
}

Rational prob(const CausalMultiteam& model, const Formula& alpha) {
  if (model.empty()) throw Error(ErrorCode::EmptyModel, "probability over an empty team is undefined");
  const auto n = count(model, alpha);
  mpq_class q(mpz_class(n), mpz_class(model.size()));
  q.canonicalize();
  return Rational(q);
}

bool eval_pco(const CausalMultiteam& model, const Formula& phi) {
  check_formula(model.signature(), phi);
  return eval(model, phi);
}

bool eval_pco_trusted(const CausalMultiteam& model, const Formula& phi) { return eval(model, phi); }

std::optional<Rational> cond_prob(const CausalMultiteam& model, const Formula& alpha, const Formula& gamma) {
  const auto selected = observe(model, gamma);
  if (selected.empty()) return std::nullopt;
  return prob(selected, alpha);
}

CausalMultiteam observe(const CausalMultiteam& model, const Formula& alpha) {
  require_co(alpha);
  check_formula(model.signature(), alpha);
  return filter(model, alpha);
}

}  // namespace pco
