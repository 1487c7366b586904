#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "pco/model.hpp"

namespace pco {

struct EnumerationBudget {
  SignaturePtr signature;
  std::size_t max_rows = 3;
  /// Only law sets accepted by the filter are enumerated.
  std::function<bool(const FunctionComponent&)> law_filter;
  /// Refuse budgets whose estimated model count exceeds this.
  std::uint64_t max_models = 5'000'000;
};

/// Upper bound on the number of models: law-set candidates (ignoring
/// acyclicity) times the multisets of at most max_rows assignments.
mpz_class estimate_model_count(const EnumerationBudget& budget);

/// Every non-constant acyclic function component of the signature, ordered
/// by endogenous set and then table contents. Throws BudgetTooLarge when the
/// candidate count exceeds `max_candidates`.
std::vector<FunctionComponent> enumerate_law_sets(const SignaturePtr& sig,
                                                  std::uint64_t max_candidates = 5'000'000);

/// Number of multisets of size at most m over n elements: C(n+m, m).
mpz_class multisets_up_to(std::uint64_t n, std::uint64_t m);

/// The models of a budget, addressable by index. Order: law set, then team
/// size, then lexicographic order of the sorted row-index sequence.
class ModelSpace {
public:
  /// Throws BudgetTooLarge with the estimate in the message.
  explicit ModelSpace(EnumerationBudget budget);

  std::uint64_t size() const { return total_; }
  const EnumerationBudget& budget() const { return budget_; }
  const std::vector<FunctionComponent>& law_sets() const { return law_sets_; }

  CausalMultiteam model(std::uint64_t index) const;

  /// Visits models with index in [begin, end) in order; stops early when
  /// `fn` returns false.
  void for_each(std::uint64_t begin, std::uint64_t end,
                const std::function<bool(std::uint64_t, const CausalMultiteam&)>& fn) const;
  void for_each(const std::function<bool(std::uint64_t, const CausalMultiteam&)>& fn) const {
    for_each(0, total_, fn);
  }

private:
  struct Block {
    std::size_t law_index;
    std::vector<Assignment> compatible;  // lexicographic
    std::uint64_t first;                 // index of the block's first model
    std::uint64_t count;
  };

  const Block& block_of(std::uint64_t index) const;
  CausalMultiteam build(const Block& block, const std::vector<std::size_t>& seq) const;

  EnumerationBudget budget_;
  std::vector<FunctionComponent> law_sets_;
  std::vector<Block> blocks_;
  std::uint64_t total_ = 0;
};

/// Convenience: all models of a budget, in ModelSpace order.
std::vector<CausalMultiteam> enumerate_models(const EnumerationBudget& budget);

}  // namespace pco
