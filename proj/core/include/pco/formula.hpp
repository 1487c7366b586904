#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>

#include "pco/rational.hpp"
#include "pco/signature.hpp"

namespace pco {

enum class Kind : std::uint8_t {
  Eq,         // Y = y
  Neq,        // Y ≠ y
  And,        // ψ ∧ χ
  GOr,        // ψ ⊔ χ (global disjunction)
  SelImp,     // α ⊃ ψ (selective implication, α ∈ CO)
  Cf,         // X = x ▷ ψ
  ProbConst,  // Pr(α) ▷ ε
  ProbProb,   // Pr(α) ▷ Pr(β)
};

enum class Cmp : std::uint8_t { Ge, Gt };

/// Immutable PCO formula. CO formulas are the sub-language built from
/// literals, ∧, ⊃ and ▷ only; `is_co()` reports membership. Subtrees are
/// shared, so copies are cheap.
class Formula {
  struct Node {
    Kind kind = Kind::Eq;
    Var var = 0;
    Val val = 0;
    Cmp cmp = Cmp::Ge;
    Rational eps;
    InterventionSpec spec;
    std::shared_ptr<const Formula> a;
    std::shared_ptr<const Formula> b;
    bool co = false;
    bool has_cf = false;
    std::size_t size = 1;
    std::size_t hash = 0;
  };

public:
  static Formula eq(Var v, Val x);
  static Formula neq(Var v, Val x);
  static Formula conj(Formula a, Formula b);
  static Formula gor(Formula a, Formula b);
  /// Throws NotCoFormula if the antecedent is not CO.
  static Formula sel(Formula antecedent, Formula consequent);
  static Formula cf(InterventionSpec spec, Formula body);
  /// Throws NotCoFormula / IllTypedArgument (threshold outside [0,1]).
  static Formula prob(Formula alpha, Cmp cmp, Rational threshold);
  static Formula prob_cmp(Formula alpha, Cmp cmp, Formula beta);

  Kind kind() const { return node_->kind; }
  bool is_co() const { return node_->co; }
  bool is_literal() const { return kind() == Kind::Eq || kind() == Kind::Neq; }
  bool is_prob_atom() const { return kind() == Kind::ProbConst || kind() == Kind::ProbProb; }
  /// True when some ▷ occurs anywhere, including inside Pr arguments.
  bool has_counterfactual() const { return node_->has_cf; }

  // Literal accessors.
  Var var() const { return node_->var; }
  Val val() const { return node_->val; }

  // ∧ / ⊔ operands.
  const Formula& left() const { return *node_->a; }
  const Formula& right() const { return *node_->b; }
  // ⊃
  const Formula& antecedent() const { return *node_->a; }
  const Formula& consequent() const { return *node_->b; }
  // ▷
  const InterventionSpec& spec() const { return node_->spec; }
  const Formula& body() const { return *node_->b; }
  // Pr atoms: first and (for comparisons) second argument.
  const Formula& arg() const { return *node_->a; }
  const Formula& arg2() const { return *node_->b; }
  Cmp cmp() const { return node_->cmp; }
  const Rational& threshold() const { return node_->eps; }

  /// Tree size, counting shared subtrees once per occurrence.
  std::size_t node_count() const { return node_->size; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b);

private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node node);

  std::shared_ptr<const Node> node_;
};


/// Throws RangeViolation if a variable, value or intervention pair is outside `sig`.
void check_formula(const Signature& sig, const Formula& phi);

/// Decides membership in the CO fragment.
inline bool is_co(const Formula& phi) { return phi.is_co(); }

}  // namespace pco

template <>
struct std::hash<pco::Formula> {
  std::size_t operator()(const pco::Formula& f) const noexcept { return f.hash(); }
};
