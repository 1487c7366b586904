#pragma once

#include <cstdint>
#include <optional>

#include "pco/formula.hpp"
#include "pco/model.hpp"

namespace pco {

/// ({s}, F) ⊨ α for a CO formula α. Throws NotCoFormula.
bool eval_co_at(const Assignment& s, const FunctionComponent& laws, const Formula& alpha);

/// T ⊨ α for CO α, row by row. Throws NotCoFormula / RangeViolation.
bool eval_co(const CausalMultiteam& model, const Formula& alpha);

/// Rows (with multiplicity) satisfying the CO formula α.
std::uint64_t count(const CausalMultiteam& model, const Formula& alpha);

/// P_T(α). Throws EmptyModel on an empty team.
Rational prob(const CausalMultiteam& model, const Formula& alpha);

/// T ⊨ φ for any PCO formula. Throws RangeViolation.
bool eval_pco(const CausalMultiteam& model, const Formula& phi);

/// eval_pco without re-checking phi against the signature; for callers
/// that evaluate one checked formula on many models.
bool eval_pco_trusted(const CausalMultiteam& model, const Formula& phi);

/// P_{T^γ}(α), or nothing when no row satisfies γ.
std::optional<Rational> cond_prob(const CausalMultiteam& model, const Formula& alpha, const Formula& gamma);

}  // namespace pco
