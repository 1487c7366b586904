#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pco/formula.hpp"

namespace pco {

// Defined operators, expanded to primitive syntax at construction.
// ⊤ and ⊥ use the first variable and its first value.

Formula top();                                  // X=x ▷ X=x
Formula bot();                                  // X=x ▷ X≠x
Formula dual_neg(const Formula& alpha);         // ¬α := α ⊃ ⊥          (CO only)
Formula tensor_or(const Formula& a, const Formula& b);   // ¬(¬α ∧ ¬β)   (CO only)
Formula co_equiv(const Formula& a, const Formula& b);    // (α⊃β) ∧ (β⊃α) (CO only)

Formula prob_ge(const Formula& alpha, const Rational& eps);
Formula prob_gt(const Formula& alpha, const Rational& eps);
Formula prob_le(const Formula& alpha, const Rational& eps);  // Pr(¬α) ≥ 1−ε
Formula prob_lt(const Formula& alpha, const Rational& eps);  // Pr(¬α) > 1−ε
Formula prob_eq(const Formula& alpha, const Rational& eps);  // Pr(α)≥ε ∧ Pr(α)≤ε
Formula prob_ne(const Formula& alpha, const Rational& eps);  // Pr(α)>ε ⊔ Pr(α)<ε

/// Pr(α | γ) ▷ ε := γ ⊃ Pr(α) ▷ ε
Formula cond_prob(const Formula& alpha, const Formula& gamma, Cmp cmp, const Rational& eps);
/// Pr(α | γ) ▷ Pr(β | γ) := γ ⊃ Pr(α) ▷ Pr(β)
Formula cond_prob_cmp(const Formula& alpha, const Formula& beta, const Formula& gamma, Cmp cmp);

/// Weak contradictory negation φ^C.
Formula neg_c(const Formula& phi);

Formula implies(const Formula& psi, const Formula& chi);  // ψ^C ⊔ χ
Formula iff(const Formula& psi, const Formula& chi);      // (ψ→χ) ∧ (χ→ψ)

Formula conj_all(std::span<const Formula> parts);       // ⊤ when empty
Formula gor_all(std::span<const Formula> parts);        // ⊥ when empty
Formula tensor_or_all(std::span<const Formula> parts);  // ⊥ when empty

enum class Polarity { Eq, Neq };
enum class Level { Co, Pco };

/// X = x as an equality conjunction, or X ≠ x as the disjunction of the
/// componentwise disequalities (⊔ at PCO level, tensor ∨ at CO level).
Formula tuple_literal(std::span<const Var> vars, std::span<const Val> vals, Polarity polarity,
                      Level level = Level::Pco);
/// Equality conjunction for an intervention spec's pairs.
Formula spec_formula(const InterventionSpec& spec);

enum class DefinedOp {
  Top, Bot, Not, Or, Equiv,
  ProbLe, ProbLt, ProbEq, ProbNe,
  CondProb, CondProbCmp,
  Implies, Iff,
};

/// Uniform entry point. Throws IllTypedArgument on a wrong argument count or
/// a non-CO argument where CO is required.
Formula mk_defined(DefinedOp op, std::span<const Formula> args, std::optional<Rational> threshold = std::nullopt,
                   Cmp cmp = Cmp::Ge);

// Shape recognisers used by neg_c and the printer.
bool is_top(const Formula& phi);
bool is_bot(const Formula& phi);
/// α if phi is ¬α (i.e. α ⊃ ⊥).
std::optional<Formula> as_dual_neg(const Formula& phi);
/// (α, β) if phi is α ∨ β in its expanded form.
std::optional<std::pair<Formula, Formula>> as_tensor_or(const Formula& phi);

}  // namespace pco
