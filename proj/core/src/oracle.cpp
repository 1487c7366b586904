#include "pco/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "pco/semantics.hpp"

namespace pco {

namespace {

bool refutes(const std::vector<Formula>& premises, const Formula& phi, const CausalMultiteam& m) {
  for (const auto& p : premises)
    if (!eval_pco_trusted(m, p)) return false;
  return !eval_pco_trusted(m, phi);
}

Verdict search(const std::vector<Formula>& premises, const Formula& phi, const ModelSpace& space,
               OracleOptions options) {
  const auto& sig = *space.budget().signature;
  for (const auto& p : premises) check_formula(sig, p);
  check_formula(sig, phi);

  const std::uint64_t total = space.size();
  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(std::max<std::uint64_t>(total, 1))));
  std::atomic<std::uint64_t> best{total};
  std::atomic<std::uint64_t> checked{0};

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t local = 0;
    space.for_each(begin, end, [&](std::uint64_t index, const CausalMultiteam& m) {
      if (index >= best.load(std::memory_order_relaxed)) return false;
      ++local;
      if (refutes(premises, phi, m)) {
        std::uint64_t cur = best.load();
        while (index < cur && !best.compare_exchange_weak(cur, index)) {
        }
        return false;
      }
      return true;
    });
    checked += local;
  };

  if (workers == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      pool.emplace_back(work, begin, std::min(total, begin + chunk));
    }
    for (auto& t : pool) t.join();
  }

  Verdict v;
  v.models_checked = checked.load();
  if (best.load() < total) {
    v.holds = false;
    v.countermodel_index = best.load();
    v.countermodel = space.model(v.countermodel_index);
  }
  return v;
}

}  // namespace

Verdict check_validity(const Formula& phi, const EnumerationBudget& budget, OracleOptions options) {
  return search({}, phi, ModelSpace(budget), options);
}

Verdict check_validity(const Formula& phi, const ModelSpace& space, OracleOptions options) {
  return search({}, phi, space, options);
}

Verdict check_entailment(const std::vector<Formula>& premises, const Formula& phi, const EnumerationBudget& budget,
                         OracleOptions options) {
  return search(premises, phi, ModelSpace(budget), options);
}

Verdict check_entailment(const std::vector<Formula>& premises, const Formula& phi, const ModelSpace& space,
                         OracleOptions options) {
  return search(premises, phi, space, options);
}

std::vector<CausalMultiteam> find_countermodels(const std::vector<Formula>& premises, const Formula& phi,
                                                const ModelSpace& space, std::size_t limit) {
  const auto& sig = *space.budget().signature;
  for (const auto& p : premises) check_formula(sig, p);
  check_formula(sig, phi);
  std::vector<CausalMultiteam> out;
  if (limit == 0) return out;
  space.for_each([&](std::uint64_t, const CausalMultiteam& m) {
    if (refutes(premises, phi, m)) out.push_back(m);
    return out.size() < limit;
  });
  return out;
}

bool isomorphic(const CausalMultiteam& a, const CausalMultiteam& b) {
  if (!(a.signature() == b.signature())) return false;
  if (a.laws().endogenous_mask() != b.laws().endogenous_mask()) return false;
  if (a.team().size() != b.team().size() || a.team().distinct() != b.team().distinct()) return false;
  const auto& sig = a.signature();
  // try every combination of per-variable range permutations
  std::vector<std::vector<Val>> perms(sig.size());
  for (Var v = 0; v < sig.size(); ++v) {
    perms[v].resize(sig.range_size(v));
    std::iota(perms[v].begin(), perms[v].end(), 0);
  }
  auto laws_match = [&] {
    for (Var v : a.laws().endogenous()) {
      const auto& ta = a.laws().table(v);
      const auto& tb = b.laws().table(v);
      for (std::size_t i = 0; i < ta.entry_count(); ++i) {
        const auto args = ta.arguments_at(i);
        Assignment at{std::vector<Val>(sig.size(), 0)};
        std::size_t k = 0;
        for (Var w = 0; w < sig.size(); ++w)
          if (w != v) at[w] = perms[w][args[k++]];
        if (tb(at) != perms[v][ta.outputs()[i]]) return false;
      }
    }
    return true;
  };
  auto matches = [&] {
    if (!laws_match()) return false;
    Multiteam mapped;
    for (const auto& [s, n] : a.team().rows()) {
      Assignment t = s;
      for (Var v = 0; v < sig.size(); ++v) t[v] = perms[v][s[v]];
      mapped.add(t, n);
    }
    return mapped == b.team();
  };
  auto rec = [&](auto&& self, Var v) -> bool {
    if (v == sig.size()) return matches();
    std::sort(perms[v].begin(), perms[v].end());
    do {
      if (self(self, v + 1)) return true;
    } while (std::next_permutation(perms[v].begin(), perms[v].end()));
    return false;
  };
  return rec(rec, 0);
}

}  // namespace pco
