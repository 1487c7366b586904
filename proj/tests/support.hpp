#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pco/pco.hpp"

namespace pco::test {

inline SignaturePtr binary_signature(std::size_t n) {
  static const char* names[] = {"X", "Y", "Z", "W"};
  std::vector<Signature::Variable> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back({names[i], {"0", "1"}});
  return make_signature(std::move(vars));
}

inline SignaturePtr tex_signature() {
  return make_signature({{"X", {"0", "1", "2"}}, {"Y", {"1", "2", "3"}}, {"Z", {"0", "1", "2", "3", "4", "6"}}});
}

// Law table from a function of the full assignment (the target column is ignored).
// Entries are listed with the last remaining variable varying fastest.
inline LawTable table_from(const Signature& sig, Var target, const std::function<Val(const Assignment&)>& f) {
  std::vector<Var> others;
  for (Var v = 0; v < sig.size(); ++v)
    if (v != target) others.push_back(v);
  std::vector<Val> outputs;
  Assignment s{std::vector<Val>(sig.size(), 0)};
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == others.size()) {
      outputs.push_back(f(s));
      return;
    }
    for (Val x = 0; x < sig.range_size(others[i]); ++x) {
      s[others[i]] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return LawTable(sig, target, std::move(outputs));
}

inline Assignment row(const Signature& sig, std::initializer_list<const char*> values) {
  Assignment s;
  Var v = 0;
  for (const char* x : values) s.values.push_back(sig.value(v++, x));
  return s;
}

// Y := X+1 and Z := X·Y with values read from the range names.
inline FunctionComponent tex_laws(const SignaturePtr& sig) {
  auto num = [&](Var v, Val x) { return std::stoi(sig->value_name(v, x)); };
  auto val_or_first = [&](Var v, int n) {
    auto x = sig->find_value(v, std::to_string(n));
    return x ? *x : Val{0};
  };
  auto fy = table_from(*sig, 1, [&](const Assignment& s) { return val_or_first(1, num(0, s[0]) + 1); });
  auto fz = table_from(*sig, 2, [&](const Assignment& s) { return val_or_first(2, num(0, s[0]) * num(1, s[1])); });
  return FunctionComponent(sig, {fy, fz});
}

inline CausalMultiteam tex_model() {
  const auto sig = tex_signature();
  Multiteam team;
  team.add(row(*sig, {"0", "1", "0"}), 1);
  team.add(row(*sig, {"1", "2", "2"}), 2);
  team.add(row(*sig, {"2", "3", "6"}), 1);
  return validate_model(std::move(team), tex_laws(sig));
}

inline CausalMultiteam tce_model() {
  const auto sig = binary_signature(2);
  Multiteam team;
  team.add(row(*sig, {"0", "0"}));
  team.add(row(*sig, {"1", "1"}));
  return validate_model(std::move(team), FunctionComponent(sig));
}

inline Formula parse(const CausalMultiteam& m, const std::string& text) { return parse_formula(text, m.signature()); }

inline std::string source_dir() { return PCO_SOURCE_DIR; }

}  // namespace pco::test
