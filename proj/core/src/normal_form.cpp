#include "pco/normal_form.hpp"

#include <stdexcept>

#include "pco/defined.hpp"
#include "pco/error.hpp"

namespace pco {

std::string_view to_string(Rewrite rule) {
  switch (rule) {
    case Rewrite::VacuousCf: return "vacuous-cf";
    case Rewrite::CfAnd: return "cf-and";
    case Rewrite::CfGOr: return "cf-gor";
    case Rewrite::CfSel: return "cf-sel";
    case Rewrite::CfMerge: return "cf-merge";
    case Rewrite::CfLiteral: return "cf-literal";
    case Rewrite::SelAnd: return "sel-and";
    case Rewrite::SelGOr: return "sel-gor";
    case Rewrite::SelSel: return "sel-sel";
    case Rewrite::SelLiteral: return "sel-literal";
    case Rewrite::PushConst: return "push-const";
    case Rewrite::PushCmp: return "push-cmp";
  }
  return "?";
}

namespace {

Formula certain(const Formula& lit) { return Formula::prob(lit, Cmp::Ge, Rational(1)); }
Formula trivially_true() { return Formula::prob(top(), Cmp::Ge, Rational(0)); }

// ▷-redex at the root, if any.
std::optional<std::pair<Formula, Rewrite>> cf_redex(const Formula& f) {
  if (f.kind() != Kind::Cf) return std::nullopt;
  const auto& s = f.spec();
  const auto& b = f.body();
  if (!s.consistent()) return std::make_pair(trivially_true(), Rewrite::VacuousCf);
  switch (b.kind()) {
    case Kind::And:
      return std::make_pair(Formula::conj(Formula::cf(s, b.left()), Formula::cf(s, b.right())), Rewrite::CfAnd);
    case Kind::GOr:
      return std::make_pair(Formula::gor(Formula::cf(s, b.left()), Formula::cf(s, b.right())), Rewrite::CfGOr);
    case Kind::SelImp:
      return std::make_pair(Formula::sel(Formula::cf(s, b.antecedent()), Formula::cf(s, b.consequent())),
                            Rewrite::CfSel);
    case Kind::Cf:
      return std::make_pair(Formula::cf(s.overridden_by(b.spec()), b.body()), Rewrite::CfMerge);
    case Kind::Eq:
    case Kind::Neq:
      return std::make_pair(Formula::cf(s, certain(b)), Rewrite::CfLiteral);
    case Kind::ProbConst:
    case Kind::ProbProb:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::pair<Formula, Rewrite>> sel_redex(const Formula& f) {
  if (f.kind() != Kind::SelImp) return std::nullopt;
  const auto& a = f.antecedent();
  const auto& c = f.consequent();
  switch (c.kind()) {
    case Kind::And:
      return std::make_pair(Formula::conj(Formula::sel(a, c.left()), Formula::sel(a, c.right())), Rewrite::SelAnd);
    case Kind::GOr:
      return std::make_pair(Formula::gor(Formula::sel(a, c.left()), Formula::sel(a, c.right())), Rewrite::SelGOr);
    case Kind::SelImp:
      return std::make_pair(Formula::sel(Formula::conj(a, c.antecedent()), c.consequent()), Rewrite::SelSel);
    case Kind::Eq:
    case Kind::Neq:
      return std::make_pair(Formula::sel(a, certain(c)), Rewrite::SelLiteral);
    default:
      return std::nullopt;
  }
}

using Finder = std::optional<std::pair<Formula, Rewrite>> (*)(const Formula&);

// Rewrites the first redex found by `find` in preorder over visited positions.
std::optional<std::pair<Formula, Rewrite>> rewrite_first(const Formula& f, Finder find) {
  if (auto r = find(f)) return r;
  switch (f.kind()) {
    case Kind::And:
    case Kind::GOr: {
      if (auto r = rewrite_first(f.left(), find)) {
        auto g = f.kind() == Kind::And ? Formula::conj(r->first, f.right()) : Formula::gor(r->first, f.right());
        return std::make_pair(g, r->second);
      }
      if (auto r = rewrite_first(f.right(), find)) {
        auto g = f.kind() == Kind::And ? Formula::conj(f.left(), r->first) : Formula::gor(f.left(), r->first);
        return std::make_pair(g, r->second);
      }
      return std::nullopt;
    }
    case Kind::SelImp:
      if (auto r = rewrite_first(f.consequent(), find))
        return std::make_pair(Formula::sel(f.antecedent(), r->first), r->second);
      return std::nullopt;
    case Kind::Cf:
      if (auto r = rewrite_first(f.body(), find)) return std::make_pair(Formula::cf(f.spec(), r->first), r->second);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<std::pair<Formula, Rewrite>> push_redex(const Formula& f) {
  if (f.kind() != Kind::Cf) return std::nullopt;
  const auto& s = f.spec();
  const auto& b = f.body();
  if (!s.consistent()) return std::make_pair(trivially_true(), Rewrite::VacuousCf);
  if (b.kind() == Kind::ProbConst)
    return std::make_pair(Formula::prob(Formula::cf(s, b.arg()), b.cmp(), b.threshold()), Rewrite::PushConst);
  if (b.kind() == Kind::ProbProb)
    return std::make_pair(Formula::prob_cmp(Formula::cf(s, b.arg()), b.cmp(), Formula::cf(s, b.arg2())),
                          Rewrite::PushCmp);
  return std::nullopt;
}

void check_decrease(const Formula& before, const Formula& after, Rewrite rule) {
  if (!(nf_measure(after) < nf_measure(before)))
    throw std::logic_error("termination measure did not decrease at rule " + std::string(to_string(rule)));
}

}  // namespace

bool is_normal_form(const Formula& phi) {
  switch (phi.kind()) {
    case Kind::And:
    case Kind::GOr:
      return is_normal_form(phi.left()) && is_normal_form(phi.right());
    case Kind::Cf:
      return phi.body().is_prob_atom();
    case Kind::SelImp: {
      const auto& c = phi.consequent();
      return (c.kind() == Kind::Cf || c.is_prob_atom()) && is_normal_form(c);
    }
    default:
      return true;
  }
}

mpz_class nf_measure(const Formula& phi) {
  switch (phi.kind()) {
    case Kind::ProbConst:
    case Kind::ProbProb:
      return 1;
    case Kind::Eq:
    case Kind::Neq:
      return 2;
    case Kind::And:
    case Kind::GOr:
      return nf_measure(phi.left()) + nf_measure(phi.right()) + 1;
    case Kind::Cf:
      return 2 * nf_measure(phi.body());
    case Kind::SelImp:
      return 3 * nf_measure(phi.consequent()) + 1;
  }
  return 0;
}

bool nf_step(const Formula& phi, Formula& out, Rewrite& rule) {
  auto r = rewrite_first(phi, cf_redex);
  if (!r) r = rewrite_first(phi, sel_redex);
  if (!r) return false;
  out = r->first;
  rule = r->second;
  return true;
}

Formula normal_form(const Formula& phi, const RewriteOptions& options) {
  Formula current = phi;
  Formula next = phi;
  Rewrite rule{};
  while (nf_step(current, next, rule)) {
    if (options.check_measure) check_decrease(current, next, rule);
    if (options.trace) options.trace(RewriteStep{rule, current, next});
    current = next;
  }
  return current;
}

Formula push_prob_inward(const Formula& phi, const RewriteOptions& options) {
  if (!is_normal_form(phi)) throw Error(ErrorCode::NotInNormalForm, "push_prob_inward needs a formula in normal form");
  Formula current = phi;
  while (auto r = rewrite_first(current, push_redex)) {
    if (options.check_measure) check_decrease(current, r->first, r->second);
    if (options.trace) options.trace(RewriteStep{r->second, current, r->first});
    current = r->first;
  }
  return current;
}

}  // namespace pco
