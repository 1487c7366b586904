#include "pco/defined.hpp"

#include "pco/error.hpp"

namespace pco {

namespace {

InterventionSpec single(Var v, Val x) { return InterventionSpec({{v, x}}); }

void require_co(const Formula& f, const char* op) {
  if (!f.is_co()) throw Error(ErrorCode::IllTypedArgument, std::string(op) + " requires CO arguments");
}

Rational one_minus(const Rational& eps) { return Rational(1) - eps; }

}  // namespace

Formula top() { return Formula::cf(single(0, 0), Formula::eq(0, 0)); }
Formula bot() { return Formula::cf(single(0, 0), Formula::neq(0, 0)); }

bool is_top(const Formula& phi) {
  return phi.kind() == Kind::Cf && phi.spec().size() == 1 && phi.body().kind() == Kind::Eq &&
         phi.body().var() == phi.spec().pairs()[0].first && phi.body().val() == phi.spec().pairs()[0].second;
}

bool is_bot(const Formula& phi) {
  return phi.kind() == Kind::Cf && phi.spec().size() == 1 && phi.body().kind() == Kind::Neq &&
         phi.body().var() == phi.spec().pairs()[0].first && phi.body().val() == phi.spec().pairs()[0].second;
}

Formula dual_neg(const Formula& alpha) {
  require_co(alpha, "¬");
  return Formula::sel(alpha, bot());
}

std::optional<Formula> as_dual_neg(const Formula& phi) {
  if (phi.kind() == Kind::SelImp && phi.consequent() == bot()) return phi.antecedent();
  return std::nullopt;
}

Formula tensor_or(const Formula& a, const Formula& b) {
  require_co(a, "∨");
  require_co(b, "∨");
  return dual_neg(Formula::conj(dual_neg(a), dual_neg(b)));
}

std::optional<std::pair<Formula, Formula>> as_tensor_or(const Formula& phi) {
  auto inner = as_dual_neg(phi);
  if (!inner || inner->kind() != Kind::And) return std::nullopt;
  auto a = as_dual_neg(inner->left());
  auto b = as_dual_neg(inner->right());
  if (!a || !b) return std::nullopt;
  return std::make_pair(*a, *b);
}

Formula co_equiv(const Formula& a, const Formula& b) {
  require_co(a, "≡");
  require_co(b, "≡");
  return Formula::conj(Formula::sel(a, b), Formula::sel(b, a));
}

Formula prob_ge(const Formula& alpha, const Rational& eps) { return Formula::prob(alpha, Cmp::Ge, eps); }
Formula prob_gt(const Formula& alpha, const Rational& eps) { return Formula::prob(alpha, Cmp::Gt, eps); }
Formula prob_le(const Formula& alpha, const Rational& eps) {
  return Formula::prob(dual_neg(alpha), Cmp::Ge, one_minus(eps));
}
Formula prob_lt(const Formula& alpha, const Rational& eps) {
  return Formula::prob(dual_neg(alpha), Cmp::Gt, one_minus(eps));
}
Formula prob_eq(const Formula& alpha, const Rational& eps) {
  return Formula::conj(prob_ge(alpha, eps), prob_le(alpha, eps));
}
Formula prob_ne(const Formula& alpha, const Rational& eps) {
  return Formula::gor(prob_gt(alpha, eps), prob_lt(alpha, eps));
}

Formula cond_prob(const Formula& alpha, const Formula& gamma, Cmp cmp, const Rational& eps) {
  return Formula::sel(gamma, Formula::prob(alpha, cmp, eps));
}

Formula cond_prob_cmp(const Formula& alpha, const Formula& beta, const Formula& gamma, Cmp cmp) {
  return Formula::sel(gamma, Formula::prob_cmp(alpha, cmp, beta));
}

Formula neg_c(const Formula& phi) {
  switch (phi.kind()) {
    case Kind::Eq:
    case Kind::Neq:
      // (X=x)^C is Pr(X=x) < 1, likewise for X≠x
      return prob_lt(phi, Rational(1));
    case Kind::ProbConst: {
      // An atom over ¬α is read as the defined Pr(α) < 1−ε / Pr(α) ≤ 1−ε,
      // whose negation is the primitive atom over α.
      if (auto inner = as_dual_neg(phi.arg())) {
        const Rational eps = one_minus(phi.threshold());
        return phi.cmp() == Cmp::Gt ? prob_ge(*inner, eps) : prob_gt(*inner, eps);
      }
      return phi.cmp() == Cmp::Ge ? prob_lt(phi.arg(), phi.threshold()) : prob_le(phi.arg(), phi.threshold());
    }
    case Kind::ProbProb:
      return Formula::prob_cmp(phi.arg2(), phi.cmp() == Cmp::Ge ? Cmp::Gt : Cmp::Ge, phi.arg());
    case Kind::And:
      return Formula::gor(neg_c(phi.left()), neg_c(phi.right()));
    case Kind::GOr:
      return Formula::conj(neg_c(phi.left()), neg_c(phi.right()));
    case Kind::SelImp:
      return Formula::conj(prob_gt(phi.antecedent(), Rational(0)),
                           Formula::sel(phi.antecedent(), neg_c(phi.consequent())));
    case Kind::Cf: {
      // vacuously true, so its negation must fail on every nonempty model
      if (!phi.spec().consistent()) return bot();
      const auto& [v, x] = phi.spec().pairs().empty() ? InterventionSpec::Pair{0, 0} : phi.spec().pairs()[0];
      if (is_bot(phi)) return Formula::cf(single(v, x), Formula::eq(v, x));
      if (is_top(phi)) return Formula::cf(single(v, x), Formula::neq(v, x));
      return Formula::cf(phi.spec(), neg_c(phi.body()));
    }
  }
  return phi;
}

Formula implies(const Formula& psi, const Formula& chi) { return Formula::gor(neg_c(psi), chi); }
Formula iff(const Formula& psi, const Formula& chi) {
  return Formula::conj(implies(psi, chi), implies(chi, psi));
}

Formula conj_all(std::span<const Formula> parts) {
  if (parts.empty()) return top();
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Formula::conj(parts[i], acc);
  return acc;
}

Formula gor_all(std::span<const Formula> parts) {
  if (parts.empty()) return bot();
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = Formula::gor(parts[i], acc);
  return acc;
}

Formula tensor_or_all(std::span<const Formula> parts) {
  if (parts.empty()) return bot();
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) acc = tensor_or(parts[i], acc);
  return acc;
}

Formula tuple_literal(std::span<const Var> vars, std::span<const Val> vals, Polarity polarity, Level level) {
  if (vars.size() != vals.size() || vars.empty())
    throw Error(ErrorCode::IllTypedArgument, "tuple literal needs matching, nonempty variable and value lists");
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < vars.size(); ++i)
    parts.push_back(polarity == Polarity::Eq ? Formula::eq(vars[i], vals[i]) : Formula::neq(vars[i], vals[i]));
  if (polarity == Polarity::Eq) return conj_all(parts);
  return level == Level::Pco ? gor_all(parts) : tensor_or_all(parts);
}

Formula spec_formula(const InterventionSpec& spec) {
  std::vector<Var> vars;
  std::vector<Val> vals;
  for (const auto& [v, x] : spec.pairs()) {
    vars.push_back(v);
    vals.push_back(x);
  }
  return tuple_literal(vars, vals, Polarity::Eq);
}

Formula mk_defined(DefinedOp op, std::span<const Formula> args, std::optional<Rational> threshold, Cmp cmp) {
  auto arity = [&](std::size_t n, const char* name) {
    if (args.size() != n)
      throw Error(ErrorCode::IllTypedArgument, std::string(name) + " takes " + std::to_string(n) + " argument(s)");
  };
  auto eps = [&](const char* name) -> const Rational& {
    if (!threshold) throw Error(ErrorCode::IllTypedArgument, std::string(name) + " needs a threshold");
    return *threshold;
  };
  switch (op) {
    case DefinedOp::Top: arity(0, "⊤"); return top();
    case DefinedOp::Bot: arity(0, "⊥"); return bot();
    case DefinedOp::Not: arity(1, "¬"); return dual_neg(args[0]);
    case DefinedOp::Or: arity(2, "∨"); return tensor_or(args[0], args[1]);
    case DefinedOp::Equiv: arity(2, "≡"); return co_equiv(args[0], args[1]);
    case DefinedOp::ProbLe: arity(1, "Pr≤"); require_co(args[0], "Pr≤"); return prob_le(args[0], eps("Pr≤"));
    case DefinedOp::ProbLt: arity(1, "Pr<"); require_co(args[0], "Pr<"); return prob_lt(args[0], eps("Pr<"));
    case DefinedOp::ProbEq: arity(1, "Pr="); require_co(args[0], "Pr="); return prob_eq(args[0], eps("Pr="));
    case DefinedOp::ProbNe: arity(1, "Pr≠"); require_co(args[0], "Pr≠"); return prob_ne(args[0], eps("Pr≠"));
    case DefinedOp::CondProb:
      arity(2, "Pr(·|·)");
      require_co(args[0], "Pr(·|·)");
      require_co(args[1], "Pr(·|·)");
      return cond_prob(args[0], args[1], cmp, eps("Pr(·|·)"));
    case DefinedOp::CondProbCmp:
      arity(3, "Pr(·|·)▷Pr(·|·)");
      for (const auto& a : args) require_co(a, "Pr(·|·)▷Pr(·|·)");
      return cond_prob_cmp(args[0], args[1], args[2], cmp);
    case DefinedOp::Implies: arity(2, "→"); return implies(args[0], args[1]);
    case DefinedOp::Iff: arity(2, "↔"); return iff(args[0], args[1]);
  }
  throw Error(ErrorCode::IllTypedArgument, "unknown defined operator");
}

}  // namespace pco
