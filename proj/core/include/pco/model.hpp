#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pco/laws.hpp"
#include "pco/signature.hpp"

namespace pco {

class Formula;

/// A multiset of assignments stored as assignment -> multiplicity (all >= 1).
class Multiteam {
public:
  using Rows = std::map<Assignment, std::uint64_t>;

  Multiteam() = default;
  explicit Multiteam(Rows rows);

  void add(const Assignment& s, std::uint64_t count = 1);

  const Rows& rows() const { return rows_; }
  std::uint64_t size() const { return total_; }
  std::size_t distinct() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  std::uint64_t multiplicity(const Assignment& s) const;

  /// Multiplicity-wise inclusion of `other` in `*this`.
  bool includes(const Multiteam& other) const;

  friend bool operator==(const Multiteam& a, const Multiteam& b) { return a.rows_ == b.rows_; }

private:
  Rows rows_;
  std::uint64_t total_ = 0;
};

/// T = (T⁻, F) over a shared signature, with every row compatible with F.
class CausalMultiteam {
public:
  /// Skips every check; callers guarantee the invariants (or deliberately
  /// break them, as fault-injection tests do).
  static CausalMultiteam assume_valid(Multiteam team, FunctionComponent laws);

  const SignaturePtr& signature_ptr() const { return laws_.signature_ptr(); }
  const Signature& signature() const { return laws_.signature(); }
  const Multiteam& team() const { return team_; }
  const FunctionComponent& laws() const { return laws_; }

  bool empty() const { return team_.empty(); }
  std::uint64_t size() const { return team_.size(); }

  /// Hash of rows and laws; equal models hash equally.
  std::size_t content_hash() const;

  friend bool operator==(const CausalMultiteam& a, const CausalMultiteam& b) {
    return a.team_ == b.team_ && a.laws_ == b.laws_;
  }

private:
  CausalMultiteam(Multiteam team, FunctionComponent laws) : team_(std::move(team)), laws_(std::move(laws)) {}

  Multiteam team_;
  FunctionComponent laws_;
};

/// Checks ranges, non-constancy and row compatibility. Throws RangeViolation,
/// ConstantFunction or CompatibilityViolation.
CausalMultiteam validate_model(Multiteam team, FunctionComponent laws);
/// As above, additionally requiring `laws` to be over `sig` (SignatureMismatch).
CausalMultiteam validate_model(Multiteam team, FunctionComponent laws, const Signature& sig);

/// Whether `s` agrees with every law of `laws`.
bool compatible(const Assignment& s, const FunctionComponent& laws);

/// s^F_{X=x}: intervened variables take their values, exogenous ones keep
/// theirs, endogenous ones are recomputed in topological order. `spec` must be
/// consistent.
Assignment apply_intervention(const Assignment& s, const FunctionComponent& laws, const InterventionSpec& spec);

/// do(X=x). Throws InconsistentIntervention or RangeViolation.
CausalMultiteam intervene(const CausalMultiteam& model, const InterventionSpec& spec);

/// T^α; rows satisfying the CO formula α, laws unchanged. Throws NotCoFormula.
CausalMultiteam observe(const CausalMultiteam& model, const Formula& alpha);

/// a ≤ b: same laws and multiplicity-wise inclusion. Throws SignatureMismatch.
bool sub_multiteam(const CausalMultiteam& a, const CausalMultiteam& b);

}  // namespace pco
