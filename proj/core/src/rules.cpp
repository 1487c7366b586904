#include "pco/rules.hpp"

#include <algorithm>

#include "pco/defined.hpp"
#include "pco/error.hpp"
#include "pco/normal_form.hpp"
#include "pco/random_formula.hpp"
#include "pco/schemas.hpp"

namespace pco {

namespace {

enum class Rule { MP, Rep, MonSel, ToSel, MonCf };

Rule parse_rule(std::string_view id) {
  if (id == "MP") return Rule::MP;
  if (id == "Rep") return Rule::Rep;
  if (id == "Mon⊃" || id == "MonSel") return Rule::MonSel;
  if (id == "→to⊃" || id == "ToSel") return Rule::ToSel;
  if (id == "Mon▷" || id == "MonCf") return Rule::MonCf;
  throw Error(ErrorCode::UnknownRule, "unknown rule '" + std::string(id) + "'");
}

Formula rebuild(const Formula& f, const Formula& theta, const Formula& theta2) {
  if (f == theta) return theta2;
  switch (f.kind()) {
    case Kind::Eq:
    case Kind::Neq:
      return f;
    case Kind::And:
      return Formula::conj(rebuild(f.left(), theta, theta2), rebuild(f.right(), theta, theta2));
    case Kind::GOr:
      return Formula::gor(rebuild(f.left(), theta, theta2), rebuild(f.right(), theta, theta2));
    case Kind::SelImp:
      return Formula::sel(rebuild(f.antecedent(), theta, theta2), rebuild(f.consequent(), theta, theta2));
    case Kind::Cf:
      return Formula::cf(f.spec(), rebuild(f.body(), theta, theta2));
    case Kind::ProbConst:
      return Formula::prob(rebuild(f.arg(), theta, theta2), f.cmp(), f.threshold());
    case Kind::ProbProb:
      return Formula::prob_cmp(rebuild(f.arg(), theta, theta2), f.cmp(), rebuild(f.arg2(), theta, theta2));
  }
  return f;
}

void subformulas(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  switch (f.kind()) {
    case Kind::And:
    case Kind::GOr:
    case Kind::SelImp:
    case Kind::ProbProb:
      subformulas(f.left(), out);
      subformulas(f.right(), out);
      break;
    case Kind::Cf:
      subformulas(f.body(), out);
      break;
    case Kind::ProbConst:
      subformulas(f.arg(), out);
      break;
    default:
      break;
  }
}

bool valid(const Formula& f, const ModelSpace& space, OracleOptions options) {
  return check_validity(f, space, options).holds;
}

// A pair (ψ, χ) for which ψ → χ should be valid, cycling through shapes;
// the last shape is random and usually fails the premise check.
std::pair<Formula, Formula> entailing_pair(FormulaGenerator& gen, std::size_t k) {
  const Formula psi = gen.pco(2);
  const Formula rho = gen.pco(2);
  switch (k % 5) {
    case 0: return {psi, Formula::gor(psi, rho)};
    case 1: return {Formula::conj(psi, rho), psi};
    case 2: return {psi, neg_c(neg_c(psi))};
    case 3: {
      const Formula a = gen.co(2);
      return {a, Formula::prob(a, Cmp::Ge, Rational(1))};
    }
    default: return {psi, rho};
  }
}

}  // namespace

const std::vector<std::string>& rule_ids() {
  static const std::vector<std::string> ids = {"MP", "Rep", "Mon⊃", "→to⊃", "Mon▷"};
  return ids;
}

RuleInstance mp_instance(const Formula& psi, const Formula& chi) { return {{psi, implies(psi, chi)}, chi}; }

Formula substitute(const Formula& phi, const Formula& theta, const Formula& theta2) {
  try {
    return rebuild(phi, theta, theta2);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotCoFormula)
      throw Error(ErrorCode::IllTypedArgument, "replacement is not CO where the replaced formula occurs in CO position");
    throw;
  }
}

RuleInstance rep_instance(const Formula& phi, const Formula& theta, const Formula& theta2) {
  return {{phi, iff(theta, theta2)}, substitute(phi, theta, theta2)};
}

RuleInstance mon_sel_instance(const Formula& alpha, const Formula& psi, const Formula& chi) {
  return {{implies(psi, chi)}, implies(Formula::sel(alpha, psi), Formula::sel(alpha, chi))};
}

RuleInstance to_sel_instance(const Formula& alpha, const Formula& psi) {
  return {{implies(alpha, psi)}, Formula::sel(alpha, psi)};
}

RuleInstance mon_cf_instance(const InterventionSpec& spec, const Formula& psi, const Formula& chi) {
  return {{implies(psi, chi)}, implies(Formula::cf(spec, psi), Formula::cf(spec, chi))};
}

RuleCase check_rule_instance(std::string_view rule, const RuleInstance& instance, const ModelSpace& space,
                             OracleOptions options) {
  RuleCase c{instance, true, {}};
  if (parse_rule(rule) == Rule::MP) {
    c.verdict = check_entailment(instance.premises, instance.conclusion, space, options);
    return c;
  }
  for (const auto& p : instance.premises)
    if (!valid(p, space, options)) {
      c.premises_valid = false;
      return c;
    }
  c.verdict = check_validity(instance.conclusion, space, options);
  return c;
}

std::size_t RuleReport::tested() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const RuleCase& c) { return c.premises_valid; }));
}

std::size_t RuleReport::violations() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const RuleCase& c) { return c.violation(); }));
}

RuleReport check_rule_soundness(std::string_view rule, const ModelSpace& space, std::size_t samples,
                                std::uint64_t seed, OracleOptions options) {
  const Rule r = parse_rule(rule);
  const auto& sig = space.budget().signature;
  RandomFormulaOptions gen_options;
  gen_options.max_depth = 2;
  FormulaGenerator gen(sig, seed, gen_options);
  RuleReport report{std::string(rule), seed, {}};

  // valid formulas to rewrite under Rep
  std::vector<Formula> theorems;
  if (r == Rule::Rep) {
    for (const char* id : {"T1", "T2", "P2", "C6", "O5⊃", "C1", "P5"})
      for (auto& f : instantiate_schema(id, sig, (samples + 6) / 7, seed)) theorems.push_back(std::move(f));
  }

  for (std::size_t k = 0; k < samples; ++k) {
    auto make = [&]() -> RuleInstance {
    switch (r) {
      case Rule::MP:
        return mp_instance(gen.pco(2), gen.pco(2));
      case Rule::Rep: {
        const Formula& phi = theorems[k % theorems.size()];
        std::vector<Formula> subs;
        subformulas(phi, subs);
        const Formula theta = subs[gen.below(subs.size())];
        Formula theta2 = theta;
        if (theta.is_co()) {
          theta2 = gen.below(2) ? dual_neg(dual_neg(theta)) : Formula::conj(theta, theta);
        } else {
          switch (gen.below(4)) {
            case 0: theta2 = neg_c(neg_c(theta)); break;
            case 1: theta2 = normal_form(theta); break;
            case 2: theta2 = Formula::conj(theta, theta); break;
            default: theta2 = Formula::gor(theta, theta); break;
          }
        }
        return rep_instance(phi, theta, theta2);
      }
      case Rule::MonSel: {
        auto [psi, chi] = entailing_pair(gen, k);
        return mon_sel_instance(gen.co(2), psi, chi);
      }
      case Rule::ToSel: {
        const Formula a = gen.co(2);
        const Formula b = gen.co(2);
        Formula psi = a;
        switch (k % 5) {
          case 0: psi = Formula::gor(a, gen.pco(2)); break;
          case 1: psi = Formula::prob(a, Cmp::Ge, Rational(1)); break;
          case 2: psi = tensor_or(a, b); break;
          case 3: psi = neg_c(neg_c(a)); break;
          default: psi = gen.pco(2); break;
        }
        return to_sel_instance(a, psi);
      }
      case Rule::MonCf: {
        auto [psi, chi] = entailing_pair(gen, k);
        return mon_cf_instance(gen.spec(true), psi, chi);
      }
    }
    throw Error(ErrorCode::UnknownRule, std::string(rule));
    };
    report.cases.push_back(check_rule_instance(rule, make(), space, options));
  }
  return report;
}

}  // namespace pco
