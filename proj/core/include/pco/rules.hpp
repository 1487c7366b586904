#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pco/oracle.hpp"

namespace pco {

/// Finitary rule identifiers: MP, Rep, Mon⊃, →to⊃, Mon▷.
const std::vector<std::string>& rule_ids();

struct RuleInstance {
  std::vector<Formula> premises;
  Formula conclusion;
};

/// ψ, ψ→χ / χ
RuleInstance mp_instance(const Formula& psi, const Formula& chi);
/// ⊢φ, ⊢θ↔θ' / ⊢φ[θ'/θ], replacing every occurrence of θ. θ' must be CO
/// whenever θ occurs where CO is required (IllTypedArgument otherwise).
RuleInstance rep_instance(const Formula& phi, const Formula& theta, const Formula& theta2);
/// ⊢ψ→χ / ⊢(α⊃ψ)→(α⊃χ)
RuleInstance mon_sel_instance(const Formula& alpha, const Formula& psi, const Formula& chi);
/// ⊢α→ψ / ⊢α⊃ψ
RuleInstance to_sel_instance(const Formula& alpha, const Formula& psi);
/// ⊢ψ→χ / ⊢(X=x▷ψ)→(X=x▷χ)
RuleInstance mon_cf_instance(const InterventionSpec& spec, const Formula& psi, const Formula& chi);

/// φ with every occurrence of θ replaced by θ'.
Formula substitute(const Formula& phi, const Formula& theta, const Formula& theta2);

struct RuleCase {
  RuleInstance instance;
  /// For validity-preserving rules: whether every premise is valid-on-budget.
  /// Cases with invalid premises say nothing about the rule.
  bool premises_valid = true;
  Verdict verdict;  // entailment (MP) or conclusion validity (other rules)
  bool violation() const { return premises_valid && !verdict.holds; }
};

/// MP is checked as truth preservation in every model, the other rules as
/// validity preservation. Throws UnknownRule.
RuleCase check_rule_instance(std::string_view rule, const RuleInstance& instance, const ModelSpace& space,
                             OracleOptions options = {});

struct RuleReport {
  std::string rule;
  std::uint64_t seed = 0;
  std::vector<RuleCase> cases;

  std::size_t tested() const;      // cases whose premises held
  std::size_t violations() const;
  bool ok() const { return violations() == 0 && tested() > 0; }
};

RuleReport check_rule_soundness(std::string_view rule, const ModelSpace& space, std::size_t samples,
                                std::uint64_t seed, OracleOptions options = {});

}  // namespace pco
