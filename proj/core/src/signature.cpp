#include "pco/signature.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "pco/error.hpp"

namespace pco {

Signature::Signature(std::vector<Variable> variables) : vars_(std::move(variables)) {
  if (vars_.empty()) throw Error(ErrorCode::InvalidSignature, "signature has no variables");
  if (vars_.size() > kMaxVariables)
    throw Error(ErrorCode::InvalidSignature, "at most 64 variables are supported");
  std::set<std::string> names;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw Error(ErrorCode::InvalidSignature, "empty variable name");
    if (!names.insert(v.name).second)
      throw Error(ErrorCode::InvalidSignature, "duplicate variable '" + v.name + "'");
    if (v.values.empty())
      throw Error(ErrorCode::InvalidSignature, "variable '" + v.name + "' has an empty range");
    std::set<std::string> vals(v.values.begin(), v.values.end());
    if (vals.size() != v.values.size())
      throw Error(ErrorCode::InvalidSignature, "variable '" + v.name + "' repeats a value");
  }
}

std::optional<Var> Signature::find(std::string_view name) const {
  for (Var v = 0; v < vars_.size(); ++v)
    if (vars_[v].name == name) return v;
  return std::nullopt;
}

std::optional<Val> Signature::find_value(Var v, std::string_view value) const {
  const auto& vals = vars_.at(v).values;
  for (Val x = 0; x < vals.size(); ++x)
    if (vals[x] == value) return x;
  return std::nullopt;
}

Var Signature::var(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
}

Val Signature::value(Var v, std::string_view value) const {
  if (auto x = find_value(v, value)) return *x;
  throw Error(ErrorCode::ValueOutOfRange,
              "value '" + std::string(value) + "' is not in the range of " + name(v));
}

std::size_t Signature::assignment_count() const {
  std::size_t n = 1;
  for (const auto& v : vars_) {
    if (n > std::numeric_limits<std::size_t>::max() / v.values.size())
      return std::numeric_limits<std::size_t>::max();
    n *= v.values.size();
  }
  return n;
}

bool operator==(const Signature& a, const Signature& b) {
  if (a.vars_.size() != b.vars_.size()) return false;
  for (std::size_t i = 0; i < a.vars_.size(); ++i)
    if (a.vars_[i].name != b.vars_[i].name || a.vars_[i].values != b.vars_[i].values) return false;
  return true;
}

SignaturePtr make_signature(std::vector<Signature::Variable> variables) {
  return std::make_shared<const Signature>(std::move(variables));
}

void check_assignment(const Signature& sig, const Assignment& s) {
  if (s.size() != sig.size())
    throw Error(ErrorCode::RangeViolation, "assignment has " + std::to_string(s.size()) +
                                               " values, signature has " + std::to_string(sig.size()));
  for (Var v = 0; v < sig.size(); ++v)
    if (s[v] >= sig.range_size(v))
      throw Error(ErrorCode::RangeViolation, "value index out of range for " + sig.name(v));
}

std::vector<Assignment> all_assignments(const Signature& sig) {
  std::vector<Assignment> out;
  Assignment s{std::vector<Val>(sig.size(), 0)};
  while (true) {
    out.push_back(s);
    std::size_t i = sig.size();
    while (i > 0) {
      --i;
      if (++s.values[i] < sig.range_size(static_cast<Var>(i))) break;
      s.values[i] = 0;
      if (i == 0) return out;
    }
  }
}

bool InterventionSpec::consistent() const {
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    for (std::size_t j = i + 1; j < pairs_.size(); ++j)
      if (pairs_[i].first == pairs_[j].first && pairs_[i].second != pairs_[j].second) return false;
  return true;
}

std::uint64_t InterventionSpec::mask() const {
  std::uint64_t m = 0;
  for (const auto& [v, x] : pairs_) m |= std::uint64_t{1} << v;
  return m;
}

std::optional<Val> InterventionSpec::value_of(Var v) const {
  for (const auto& [w, x] : pairs_)
    if (w == v) return x;
  return std::nullopt;
}

InterventionSpec InterventionSpec::normalized() const {
  auto p = pairs_;
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end(), [](const Pair& a, const Pair& b) { return a.first == b.first; }),
          p.end());
  return InterventionSpec(std::move(p));
}

InterventionSpec InterventionSpec::overridden_by(const InterventionSpec& inner) const {
  const auto inner_mask = inner.mask();
  std::vector<Pair> out;
  for (const auto& pr : pairs_)
    if (!(inner_mask & (std::uint64_t{1} << pr.first))) out.push_back(pr);
  out.insert(out.end(), inner.pairs_.begin(), inner.pairs_.end());
  return InterventionSpec(std::move(out));
}

InterventionSpec InterventionSpec::operator+(const InterventionSpec& other) const {
  auto p = pairs_;
  p.insert(p.end(), other.pairs_.begin(), other.pairs_.end());
  return InterventionSpec(std::move(p));
}

void check_spec(const Signature& sig, const InterventionSpec& spec) {
  for (const auto& [v, x] : spec.pairs()) {
    if (v >= sig.size()) throw Error(ErrorCode::RangeViolation, "intervention names an unknown variable");
    if (x >= sig.range_size(v))
      throw Error(ErrorCode::RangeViolation, "intervention value out of range for " + sig.name(v));
  }
}

}  // namespace pco
