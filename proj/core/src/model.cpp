#include "pco/model.hpp"

#include <functional>

#include "pco/error.hpp"

namespace pco {

Multiteam::Multiteam(Rows rows) {
  for (auto& [s, n] : rows) add(s, n);
}

void Multiteam::add(const Assignment& s, std::uint64_t count) {
  if (count == 0) return;
  rows_[s] += count;
  total_ += count;
}

std::uint64_t Multiteam::multiplicity(const Assignment& s) const {
  auto it = rows_.find(s);
  return it == rows_.end() ? 0 : it->second;
}

bool Multiteam::includes(const Multiteam& other) const {
  for (const auto& [s, n] : other.rows_)
    if (multiplicity(s) < n) return false;
  return true;
}

CausalMultiteam CausalMultiteam::assume_valid(Multiteam team, FunctionComponent laws) {
  return CausalMultiteam(std::move(team), std::move(laws));
}

std::size_t CausalMultiteam::content_hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& [s, n] : team_.rows()) {
    for (Val x : s.values) mix(x);
    mix(n);
  }
  mix(laws_.endogenous_mask());
  for (Var v : laws_.endogenous())
    for (Val y : laws_.table(v).outputs()) mix(y);
  return h;
}

bool compatible(const Assignment& s, const FunctionComponent& laws) {
  for (Var v : laws.endogenous())
    if (laws.table(v)(s) != s[v]) return false;
  return true;
}

CausalMultiteam validate_model(Multiteam team, FunctionComponent laws) {
  const Signature& sig = laws.signature();
  laws.check_non_constant();
  for (const auto& [s, n] : team.rows()) {
    check_assignment(sig, s);
    for (Var v : laws.endogenous()) {
      const Val expected = laws.table(v)(s);
      if (expected != s[v]) {
        std::string row;
        for (Var u = 0; u < sig.size(); ++u) row += (u ? " " : "") + sig.value_name(u, s[u]);
        throw Error(ErrorCode::CompatibilityViolation,
                    "row (" + row + ") has " + sig.name(v) + "=" + sig.value_name(v, s[v]) + " but its law gives " +
                        sig.value_name(v, expected));
      }
    }
  }
  return CausalMultiteam::assume_valid(std::move(team), std::move(laws));
}

CausalMultiteam validate_model(Multiteam team, FunctionComponent laws, const Signature& sig) {
  if (!(laws.signature() == sig)) throw Error(ErrorCode::SignatureMismatch, "laws are over a different signature");
  return validate_model(std::move(team), std::move(laws));
}

Assignment apply_intervention(const Assignment& s, const FunctionComponent& laws, const InterventionSpec& spec) {
  Assignment out = s;
  for (const auto& [v, x] : spec.pairs()) out[v] = x;
  const std::uint64_t fixed = spec.mask();
  for (Var v : laws.base_order()) {
    if (!laws.is_endogenous(v) || ((fixed >> v) & 1U)) continue;
    out[v] = (*laws.table_or_null(v))(out);
  }
  return out;
}

CausalMultiteam intervene(const CausalMultiteam& model, const InterventionSpec& spec) {
  check_spec(model.signature(), spec);
  if (!spec.consistent()) throw Error(ErrorCode::InconsistentIntervention, "intervention binds a variable twice");
  Multiteam image;
  for (const auto& [s, n] : model.team().rows()) image.add(apply_intervention(s, model.laws(), spec), n);
  return CausalMultiteam::assume_valid(std::move(image), model.laws().restricted(spec.mask()));
}

bool sub_multiteam(const CausalMultiteam& a, const CausalMultiteam& b) {
  if (!(a.signature() == b.signature())) throw Error(ErrorCode::SignatureMismatch, "models have different signatures");
  return a.laws() == b.laws() && b.team().includes(a.team());
}

}  // namespace pco
