#pragma once

#include <cstddef>

#include "pco/formula.hpp"
#include "pco/laws.hpp"

namespace pco {

/// Node limit for the characterization builders; exceeding it throws
/// FormulaTooLarge before the whole formula is materialized.
struct BuildLimits {
  std::size_t node_budget = 1'000'000;
};

/// "X causally affects Y": tensor disjunction over Z ⊆ Dom∖{X,Y}, z, x≠x',
/// y≠y' of ((Z=z ∧ X=x) ▷ Y=y) ∧ ((Z=z ∧ X=x') ▷ Y=y'). Throws SameVariable.
Formula build_aff(const Signature& sig, Var x, Var y, BuildLimits limits = {});

/// X is a direct cause of Y: as build_aff with Z fixed to W_XY = Dom∖{X,Y}.
Formula build_dc(const Signature& sig, Var x, Var y, BuildLimits limits = {});

/// Y is endogenous: ⊔ over X ≠ Y of build_dc(X, Y).
Formula build_end(const Signature& sig, Var y, BuildLimits limits = {});
/// Y is exogenous: the weak contradictory negation of build_end(Y).
Formula build_exo(const Signature& sig, Var y, BuildLimits limits = {});

/// W_V = w ▷ V = F_V(w) for every w.
Formula build_eta(const FunctionComponent& laws, Var v, BuildLimits limits = {});
/// V = v ⊃ (W_V = w ▷ V = v) for every w and v.
Formula build_xi(const Signature& sig, Var v, BuildLimits limits = {});

/// Φ^F: η for endogenous variables, ξ for exogenous ones.
Formula build_phi_f(const FunctionComponent& laws, BuildLimits limits = {});

}  // namespace pco
