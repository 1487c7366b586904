#pragma once

#include <functional>
#include <string_view>

#include <gmpxx.h>

#include "pco/formula.hpp"

namespace pco {

enum class Rewrite {
  VacuousCf,      // X=x ▷ φ with inconsistent X=x  =>  Pr(⊤) ≥ 0
  CfAnd,          // X=x ▷ (ψ∧χ)  =>  (X=x ▷ ψ) ∧ (X=x ▷ χ)
  CfGOr,          // X=x ▷ (ψ⊔χ)  =>  (X=x ▷ ψ) ⊔ (X=x ▷ χ)
  CfSel,          // X=x ▷ (α⊃χ)  =>  (X=x ▷ α) ⊃ (X=x ▷ χ)
  CfMerge,        // X=x ▷ (Y=y ▷ φ)  =>  (X'=x' ∧ Y=y) ▷ φ
  CfLiteral,      // X=x ▷ lit  =>  X=x ▷ Pr(lit) ≥ 1
  SelAnd,         // α ⊃ (ψ∧χ)  =>  (α⊃ψ) ∧ (α⊃χ)
  SelGOr,         // α ⊃ (ψ⊔χ)  =>  (α⊃ψ) ⊔ (α⊃χ)
  SelSel,         // α ⊃ (β⊃χ)  =>  (α∧β) ⊃ χ
  SelLiteral,     // α ⊃ lit  =>  α ⊃ Pr(lit) ≥ 1
  PushConst,      // X=x ▷ Pr(β) ▷ ε  =>  Pr(X=x ▷ β) ▷ ε
  PushCmp,        // X=x ▷ Pr(α) ▷ Pr(β)  =>  Pr(X=x ▷ α) ▷ Pr(X=x ▷ β)
};

std::string_view to_string(Rewrite rule);

struct RewriteStep {
  Rewrite rule;
  Formula before;
  Formula after;
};

struct RewriteOptions {
  /// Called after every step with the whole formula before and after.
  std::function<void(const RewriteStep&)> trace;
  /// Verify that the termination measure strictly decreases at every step
  /// (throws std::logic_error otherwise).
  bool check_measure = true;
};

/// Every ▷ reachable through ∧, ⊔, ⊃-consequents and ▷-bodies has a
/// probabilistic atom as body, and every such ⊃ has a counterfactual or a
/// probabilistic atom as consequent.
bool is_normal_form(const Formula& phi);

/// Termination measure of the rewriting system: a polynomial interpretation
/// over the positions the rewriter visits (atoms 1, literals 2, ∧/⊔ a+b+1,
/// ▷ 2a, ⊃ 3a+1 in the consequent).
mpz_class nf_measure(const Formula& phi);

/// Rewrites one leftmost-outermost redex, ▷-rules before ⊃-rules. Returns
/// false when phi is already in normal form.
bool nf_step(const Formula& phi, Formula& out, Rewrite& rule);

Formula normal_form(const Formula& phi, const RewriteOptions& options = {});

/// Moves every counterfactual at a visited position into the probability
/// arguments below it. Throws NotInNormalForm.
Formula push_prob_inward(const Formula& phi, const RewriteOptions& options = {});

}  // namespace pco
