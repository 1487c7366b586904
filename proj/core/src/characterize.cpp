#include "pco/characterize.hpp"

#include <string>
#include <vector>

#include "pco/defined.hpp"
#include "pco/error.hpp"

namespace pco {

namespace {

// Accumulates the parts of a big conjunction/disjunction and enforces the
// node budget as they arrive.
class Parts {
public:
  Parts(BuildLimits limits, const char* what) : limits_(limits), what_(what) {}

  void add(Formula f) {
    // each fold step adds at most four connective nodes (tensor ∨)
    nodes_ += f.node_count() + 4;
    if (nodes_ > limits_.node_budget)
      throw Error(ErrorCode::FormulaTooLarge, std::string(what_) + " exceeds the node budget of " +
                                                   std::to_string(limits_.node_budget));
    parts_.push_back(std::move(f));
  }

  const std::vector<Formula>& parts() const { return parts_; }

private:
  BuildLimits limits_;
  const char* what_;
  std::size_t nodes_ = 0;
  std::vector<Formula> parts_;
};

void check_var(const Signature& sig, Var v) {
  if (v >= sig.size()) throw Error(ErrorCode::RangeViolation, "variable index " + std::to_string(v) + " out of range");
}

// Calls fn(values) for every value tuple over `vars` in lexicographic order.
template <typename Fn>
void for_each_tuple(const Signature& sig, const std::vector<Var>& vars, Fn&& fn) {
  std::vector<Val> vals(vars.size(), 0);
  while (true) {
    fn(vals);
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++vals[i] < sig.range_size(vars[i])) break;
      vals[i] = 0;
      if (i == 0) return;
    }
    if (vars.empty()) return;
  }
}

InterventionSpec make_spec(const std::vector<Var>& vars, const std::vector<Val>& vals) {
  std::vector<InterventionSpec::Pair> pairs;
  for (std::size_t i = 0; i < vars.size(); ++i) pairs.emplace_back(vars[i], vals[i]);
  return InterventionSpec(std::move(pairs));
}

std::vector<Var> others(const Signature& sig, std::uint64_t excluded) {
  std::vector<Var> out;
  for (Var v = 0; v < sig.size(); ++v)
    if (!((excluded >> v) & 1U)) out.push_back(v);
  return out;
}

// The paired-counterfactual disjuncts for a fixed Z.
void add_witnesses(const Signature& sig, Var x, Var y, const std::vector<Var>& zs, Parts& parts) {
  for_each_tuple(sig, zs, [&](const std::vector<Val>& z) {
    for (Val a = 0; a < sig.range_size(x); ++a)
      for (Val a2 = 0; a2 < sig.range_size(x); ++a2) {
        if (a == a2) continue;
        auto s1 = make_spec(zs, z) + InterventionSpec({{x, a}});
        auto s2 = make_spec(zs, z) + InterventionSpec({{x, a2}});
        for (Val b = 0; b < sig.range_size(y); ++b)
          for (Val b2 = 0; b2 < sig.range_size(y); ++b2) {
            if (b == b2) continue;
            parts.add(Formula::conj(Formula::cf(s1, Formula::eq(y, b)), Formula::cf(s2, Formula::eq(y, b2))));
          }
      }
  });
}

void require_distinct(const Signature& sig, Var x, Var y, const char* what) {
  check_var(sig, x);
  check_var(sig, y);
  if (x == y) throw Error(ErrorCode::SameVariable, std::string(what) + " needs two distinct variables, got " + sig.name(x) + " twice");
}

}  // namespace

Formula build_aff(const Signature& sig, Var x, Var y, BuildLimits limits) {
  require_distinct(sig, x, y, "aff");
  const auto rest = others(sig, (std::uint64_t{1} << x) | (std::uint64_t{1} << y));
  Parts parts(limits, "aff formula");
  const std::size_t subsets = std::size_t{1} << rest.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<Var> zs;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if ((mask >> i) & 1U) zs.push_back(rest[i]);
    add_witnesses(sig, x, y, zs, parts);
  }
  return tensor_or_all(parts.parts());
}

Formula build_dc(const Signature& sig, Var x, Var y, BuildLimits limits) {
  require_distinct(sig, x, y, "direct-cause formula");
  Parts parts(limits, "direct-cause formula");
  add_witnesses(sig, x, y, others(sig, (std::uint64_t{1} << x) | (std::uint64_t{1} << y)), parts);
  return tensor_or_all(parts.parts());
}

Formula build_end(const Signature& sig, Var y, BuildLimits limits) {
  check_var(sig, y);
  Parts parts(limits, "endogeneity formula");
  for (Var x = 0; x < sig.size(); ++x)
    if (x != y) parts.add(build_dc(sig, x, y, limits));
  return gor_all(parts.parts());
}

Formula build_exo(const Signature& sig, Var y, BuildLimits limits) { return neg_c(build_end(sig, y, limits)); }

Formula build_eta(const FunctionComponent& laws, Var v, BuildLimits limits) {
  const auto& sig = laws.signature();
  const auto& table = laws.table(v);
  const auto ws = others(sig, std::uint64_t{1} << v);
  Parts parts(limits, "law formula");
  for (std::size_t i = 0; i < table.entry_count(); ++i)
    parts.add(Formula::cf(make_spec(ws, table.arguments_at(i)), Formula::eq(v, table.outputs()[i])));
  return conj_all(parts.parts());
}

Formula build_xi(const Signature& sig, Var v, BuildLimits limits) {
  check_var(sig, v);
  const auto ws = others(sig, std::uint64_t{1} << v);
  Parts parts(limits, "exogeneity formula");
  for_each_tuple(sig, ws, [&](const std::vector<Val>& w) {
    for (Val a = 0; a < sig.range_size(v); ++a)
      parts.add(Formula::sel(Formula::eq(v, a), Formula::cf(make_spec(ws, w), Formula::eq(v, a))));
  });
  return conj_all(parts.parts());
}

Formula build_phi_f(const FunctionComponent& laws, BuildLimits limits) {
  const auto& sig = laws.signature();
  Parts parts(limits, "function-component formula");
  for (Var v = 0; v < sig.size(); ++v) {
    if (laws.is_endogenous(v)) parts.add(build_eta(laws, v, limits));
  }
  for (Var v = 0; v < sig.size(); ++v) {
    if (!laws.is_endogenous(v)) parts.add(build_xi(sig, v, limits));
  }
  return conj_all(parts.parts());
}

}  // namespace pco
