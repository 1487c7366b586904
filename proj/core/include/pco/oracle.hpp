#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pco/enumerate.hpp"
#include "pco/formula.hpp"

namespace pco {

struct OracleOptions {
  /// Worker threads splitting the model index range; results do not depend on it.
  unsigned threads = 1;
};

/// Outcome of a bounded check. `holds` means no countermodel exists within
/// the budget (valid-on-budget), which is not a proof of validity.
struct Verdict {
  bool holds = true;
  std::optional<CausalMultiteam> countermodel;
  std::uint64_t countermodel_index = 0;
  std::uint64_t models_checked = 0;
};

/// First model (in enumeration order) falsifying phi. Throws BudgetTooLarge.
Verdict check_validity(const Formula& phi, const EnumerationBudget& budget, OracleOptions options = {});
Verdict check_validity(const Formula& phi, const ModelSpace& space, OracleOptions options = {});

/// First model satisfying every premise and falsifying phi.
Verdict check_entailment(const std::vector<Formula>& premises, const Formula& phi, const EnumerationBudget& budget,
                         OracleOptions options = {});
Verdict check_entailment(const std::vector<Formula>& premises, const Formula& phi, const ModelSpace& space,
                         OracleOptions options = {});

/// Up to `limit` countermodels of the entailment, in enumeration order.
std::vector<CausalMultiteam> find_countermodels(const std::vector<Formula>& premises, const Formula& phi,
                                                const ModelSpace& space, std::size_t limit);

/// Equal up to renaming the values of each variable by a permutation of its
/// range, applied to rows and law tables alike.
bool isomorphic(const CausalMultiteam& a, const CausalMultiteam& b);

}  // namespace pco
