#include "pco/enumerate.hpp"

#include <algorithm>

#include "pco/error.hpp"

namespace pco {

namespace {

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  const mpz_class r = binomial(n, k);
  if (!r.fits_ulong_p()) throw Error(ErrorCode::Overflow, "model count exceeds 64 bits");
  return r.get_ui();
}

// Number of non-constant tables over W_V for v; -1 when unreasonably large.
mpz_class table_count(const Signature& sig, Var v) {
  mpz_class entries = 1;
  for (Var w = 0; w < sig.size(); ++w)
    if (w != v) entries *= static_cast<unsigned long>(sig.range_size(w));
  // beyond this the count is astronomically large anyway
  if (!entries.fits_ulong_p() || entries > 4096) return mpz_class(-1);
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), sig.range_size(v), entries.get_ui());
  return total - static_cast<unsigned long>(sig.range_size(v));
}

mpz_class law_candidates(const Signature& sig) {
  // Σ over endogenous subsets of Π table counts = Π (1 + count)
  mpz_class product = 1;
  for (Var v = 0; v < sig.size(); ++v) {
    const mpz_class c = table_count(sig, v);
    if (c < 0) return mpz_class(-1);
    product *= c + 1;
  }
  return product;
}

// Advances a mixed-radix counter; false after the last value.
bool next_outputs(std::vector<Val>& out, std::size_t radix) {
  for (std::size_t i = out.size(); i-- > 0;) {
    if (++out[i] < radix) return true;
    out[i] = 0;
  }
  return false;
}

}  // namespace

mpz_class multisets_up_to(std::uint64_t n, std::uint64_t m) { return binomial(n + m, m); }

mpz_class estimate_model_count(const EnumerationBudget& budget) {
  const auto& sig = *budget.signature;
  const mpz_class laws = law_candidates(sig);
  if (laws < 0) return mpz_class(-1);
  return laws * multisets_up_to(sig.assignment_count(), budget.max_rows);
}

std::vector<FunctionComponent> enumerate_law_sets(const SignaturePtr& sig, std::uint64_t max_candidates) {
  const mpz_class candidates = law_candidates(*sig);
  if (candidates < 0 || candidates > mpz_class(static_cast<unsigned long>(max_candidates)))
    throw Error(ErrorCode::BudgetTooLarge,
                "about " + (candidates < 0 ? std::string("too many") : candidates.get_str()) + " candidate law sets");

  // Every non-constant table per variable, in lexicographic order of outputs.
  std::vector<std::vector<LawTable>> options(sig->size());
  for (Var v = 0; v < sig->size(); ++v) {
    std::size_t entries = 1;
    for (Var w = 0; w < sig->size(); ++w)
      if (w != v) entries *= sig->range_size(w);
    std::vector<Val> out(entries, 0);
    do {
      if (std::adjacent_find(out.begin(), out.end(), std::not_equal_to<>()) == out.end()) continue;
      options[v].emplace_back(*sig, v, out);
    } while (next_outputs(out, sig->range_size(v)));
  }

  std::vector<FunctionComponent> result;
  std::vector<std::vector<Var>> parents_of(sig->size());
  std::vector<LawTable> chosen;
  // Endogenous subsets in increasing bitmask order, then tables by DFS.
  const std::uint64_t subsets = std::uint64_t{1} << sig->size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<Var> endo;
    for (Var v = 0; v < sig->size(); ++v)
      if ((mask >> v) & 1U) endo.push_back(v);
    auto dfs = [&](auto&& self, std::size_t k) -> void {
      if (k == endo.size()) {
        if (!find_cycle(parents_of)) result.emplace_back(sig, chosen);
        return;
      }
      const Var v = endo[k];
      for (const auto& table : options[v]) {
        parents_of[v] = table.parents();
        // prune as soon as a cycle appears among the chosen tables
        if (!find_cycle(parents_of)) {
          chosen.push_back(table);
          self(self, k + 1);
          chosen.pop_back();
        }
        parents_of[v].clear();
      }
    };
    dfs(dfs, 0);
  }
  return result;
}

ModelSpace::ModelSpace(EnumerationBudget budget) : budget_(std::move(budget)) {
  if (!budget_.signature) throw Error(ErrorCode::InvalidSignature, "budget has no signature");
  const mpz_class estimate = estimate_model_count(budget_);
  if (estimate < 0 || estimate > mpz_class(static_cast<unsigned long>(budget_.max_models)))
    throw Error(ErrorCode::BudgetTooLarge,
                "estimated " + (estimate < 0 ? std::string("more than 2^64") : estimate.get_str()) +
                    " models exceeds the cap of " + std::to_string(budget_.max_models));

  for (auto& laws : enumerate_law_sets(budget_.signature, budget_.max_models)) {
    if (budget_.law_filter && !budget_.law_filter(laws)) continue;
    law_sets_.push_back(std::move(laws));
  }
  const auto assignments = all_assignments(*budget_.signature);
  for (std::size_t i = 0; i < law_sets_.size(); ++i) {
    Block b{i, {}, total_, 0};
    for (const auto& s : assignments)
      if (compatible(s, law_sets_[i])) b.compatible.push_back(s);
    b.count = binomial_u64(b.compatible.size() + budget_.max_rows, budget_.max_rows);
    total_ += b.count;
    blocks_.push_back(std::move(b));
  }
}

const ModelSpace::Block& ModelSpace::block_of(std::uint64_t index) const {
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](std::uint64_t i, const Block& b) { return i < b.first; });
  return *std::prev(it);
}

CausalMultiteam ModelSpace::build(const Block& block, const std::vector<std::size_t>& seq) const {
  Multiteam team;
  for (std::size_t i : seq) team.add(block.compatible[i]);
  return CausalMultiteam::assume_valid(std::move(team), law_sets_[block.law_index]);
}

CausalMultiteam ModelSpace::model(std::uint64_t index) const {
  if (index >= total_) throw Error(ErrorCode::RangeViolation, "model index out of range");
  const Block& block = block_of(index);
  std::uint64_t rank = index - block.first;
  const std::uint64_t n = block.compatible.size();
  // team size r holds C(n+r-1, r) sequences
  std::uint64_t r = 0;
  for (;; ++r) {
    const std::uint64_t c = binomial_u64(n + r - 1 + (n == 0 && r == 0 ? 1 : 0), r);
    if (rank < c) break;
    rank -= c;
  }
  std::vector<std::size_t> seq;
  std::size_t lo = 0;
  for (std::uint64_t left = r; left > 0; --left) {
    for (std::size_t c = lo;; ++c) {
      // sequences of length left-1 over [c, n)
      const std::uint64_t with_c = binomial_u64(n - c + left - 2, left - 1);
      if (rank < with_c) {
        seq.push_back(c);
        lo = c;
        break;
      }
      rank -= with_c;
    }
  }
  return build(block, seq);
}

void ModelSpace::for_each(std::uint64_t begin, std::uint64_t end,
                          const std::function<bool(std::uint64_t, const CausalMultiteam&)>& fn) const {
  end = std::min(end, total_);
  if (begin >= end) return;
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), begin,
                             [](std::uint64_t i, const Block& b) { return i < b.first; });
  for (auto bi = std::prev(it); bi != blocks_.end(); ++bi) {
    const Block& block = *bi;
    if (block.first >= end) return;
    const std::size_t n = block.compatible.size();
    std::uint64_t index = block.first;
    for (std::size_t r = 0; r <= budget_.max_rows; ++r) {
      if (r > 0 && n == 0) break;
      std::vector<std::size_t> seq(r, 0);
      while (true) {
        if (index >= end) return;
        if (index >= begin && !fn(index, build(block, seq))) return;
        ++index;
        // next nondecreasing sequence
        std::size_t i = r;
        while (i > 0 && seq[i - 1] + 1 == n) --i;
        if (i == 0) break;
        const std::size_t v = seq[i - 1] + 1;
        for (std::size_t j = i - 1; j < r; ++j) seq[j] = v;
      }
    }
  }
}

std::vector<CausalMultiteam> enumerate_models(const EnumerationBudget& budget) {
  ModelSpace space(budget);
  std::vector<CausalMultiteam> out;
  out.reserve(space.size());
  space.for_each([&](std::uint64_t, const CausalMultiteam& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace pco
