#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pco {

/// Position of a variable in the signature's fixed listing.
using Var = std::uint32_t;
/// Position of a value inside its variable's range.
using Val = std::uint32_t;

/// Variables are tracked in 64-bit masks throughout the library.
inline constexpr std::size_t kMaxVariables = 64;

class Signature {
public:
  struct Variable {
    std::string name;
    std::vector<std::string> values;
  };

  /// Throws InvalidSignature on empty domain, empty ranges, or duplicate names.
  explicit Signature(std::vector<Variable> variables);

  std::size_t size() const { return vars_.size(); }
  const std::string& name(Var v) const { return vars_.at(v).name; }
  std::size_t range_size(Var v) const { return vars_.at(v).values.size(); }
  const std::string& value_name(Var v, Val x) const { return vars_.at(v).values.at(x); }
  const std::vector<Variable>& variables() const { return vars_; }

  std::optional<Var> find(std::string_view name) const;
  std::optional<Val> find_value(Var v, std::string_view value) const;
  /// Throws UnknownVariable.
  Var var(std::string_view name) const;
  /// Throws ValueOutOfRange.
  Val value(Var v, std::string_view value) const;

  /// Number of full assignments, saturating at SIZE_MAX.
  std::size_t assignment_count() const;

  friend bool operator==(const Signature& a, const Signature& b);

private:
  std::vector<Variable> vars_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<Signature::Variable> variables);

/// Total map Dom -> values, stored positionally in signature order.
struct Assignment {
  std::vector<Val> values;

  Val operator[](Var v) const { return values[v]; }
  Val& operator[](Var v) { return values[v]; }
  std::size_t size() const { return values.size(); }

  friend auto operator<=>(const Assignment&, const Assignment&) = default;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Throws RangeViolation unless `s` is a total assignment over `sig`.
void check_assignment(const Signature& sig, const Assignment& s);

/// Enumerates every assignment of the signature in lexicographic order.
std::vector<Assignment> all_assignments(const Signature& sig);

/// The antecedent `X1=x1 ∧ ... ∧ Xn=xn` of an intervention or counterfactual.
class InterventionSpec {
public:
  using Pair = std::pair<Var, Val>;

  InterventionSpec() = default;
  explicit InterventionSpec(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {}

  const std::vector<Pair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }

  /// False iff two pairs bind the same variable to different values.
  bool consistent() const;
  /// Bitmask of intervened variables.
  std::uint64_t mask() const;
  /// Value bound to `v`, if any (first occurrence).
  std::optional<Val> value_of(Var v) const;

  /// Sorted by variable with duplicates removed; only meaningful when consistent.
  InterventionSpec normalized() const;

  /// Pairs of `this` whose variable is not bound by `inner`, followed by `inner`.
  InterventionSpec overridden_by(const InterventionSpec& inner) const;

  /// Concatenation (`X=x ∧ Y=y`).
  InterventionSpec operator+(const InterventionSpec& other) const;

  friend bool operator==(const InterventionSpec&, const InterventionSpec&) = default;
  friend auto operator<=>(const InterventionSpec&, const InterventionSpec&) = default;

private:
  std::vector<Pair> pairs_;
};

/// Throws RangeViolation if a pair names an unknown variable or out-of-range value.
void check_spec(const Signature& sig, const InterventionSpec& spec);

}  // namespace pco
