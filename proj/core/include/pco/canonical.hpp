#pragma once

#include <map>
#include <string>
#include <vector>

#include "pco/formula.hpp"
#include "pco/model.hpp"

namespace pco {

/// Probability weights on full assignments together with the laws.
/// Assignments absent from `weights` have weight zero.
struct AtomicDescription {
  FunctionComponent laws;
  std::map<Assignment, Rational> weights;

  const Signature& signature() const { return laws.signature(); }
  friend bool operator==(const AtomicDescription&, const AtomicDescription&) = default;
};

/// Least common multiple of the reduced denominators of the positive weights.
mpz_class least_common_denominator(const AtomicDescription& desc);

/// m_i copies of each s_i with m_i = ε_i·d, d the least common denominator.
/// Throws WeightsNotNormalized, SupportIncompatible, RangeViolation,
/// ConstantFunction, or Overflow when a count does not fit 64 bits.
CausalMultiteam build_canonical(const AtomicDescription& desc);

/// weights(s) = multiplicity(s) / |T⁻|. Throws EmptyModel.
AtomicDescription extract_description(const CausalMultiteam& model);

/// The conjunction X₁ = s(X₁) ∧ ... ∧ Xₙ = s(Xₙ) over the whole signature.
Formula full_assignment_formula(const Signature& sig, const Assignment& s);

/// Divides every multiplicity by their gcd.
CausalMultiteam reduce_multiplicities(const CausalMultiteam& model);

struct CanonicalReport {
  enum class Status { Pass, Fail, NotApplicable };
  struct Item {
    int number;
    std::string name;
    Status status;
    std::string detail;
  };
  std::vector<Item> items;

  /// No item failed (not-applicable items count as passing).
  bool ok() const;
  std::string str() const;
};

/// Checks the six properties of a canonical model on `model`:
/// 1 rows compatible with the laws, 2 parent graph acyclic, 3 weights sum to
/// one, 4 |T⁻| is a common denominator d with m_i = ε_i·d, 5 P_T(α̂_i) = ε_i,
/// 6 P_T(β) = Σ ε_i over the s_i satisfying β, for each supplied β.
CanonicalReport check_canonical_properties(const CausalMultiteam& model, const std::vector<Formula>& betas = {});

}  // namespace pco
