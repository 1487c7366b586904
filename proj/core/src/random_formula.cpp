#include "pco/random_formula.hpp"

#include <algorithm>
#include <numeric>

#include "pco/defined.hpp"

namespace pco {

FormulaGenerator::FormulaGenerator(SignaturePtr sig, std::uint64_t seed, RandomFormulaOptions options)
    : sig_(std::move(sig)), rng_(seed), options_(options) {}

std::size_t FormulaGenerator::below(std::size_t n) {
  return n <= 1 ? 0 : std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

Var FormulaGenerator::variable() { return static_cast<Var>(below(sig_->size())); }
Val FormulaGenerator::value(Var v) { return static_cast<Val>(below(sig_->range_size(v))); }

Formula FormulaGenerator::literal() {
  const Var v = variable();
  const Val x = value(v);
  return below(2) ? Formula::neq(v, x) : Formula::eq(v, x);
}

Rational FormulaGenerator::rational() {
  const long q = 1 + static_cast<long>(below(options_.max_denominator));
  const long p = static_cast<long>(below(static_cast<std::size_t>(q) + 1));
  return Rational(p, q);
}

InterventionSpec FormulaGenerator::spec(bool allow_inconsistent) {
  const std::size_t n = 1 + below(std::min(options_.max_spec_pairs, sig_->size()));
  std::vector<Var> vars(sig_->size());
  std::iota(vars.begin(), vars.end(), 0);
  std::shuffle(vars.begin(), vars.end(), rng_);
  std::vector<InterventionSpec::Pair> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(vars[i], value(vars[i]));
  if (allow_inconsistent && below(100) < options_.inconsistent_spec_percent) {
    const Var v = pairs.front().first;
    if (sig_->range_size(v) > 1) {
      const Val other = static_cast<Val>((pairs.front().second + 1 + below(sig_->range_size(v) - 1)) % sig_->range_size(v));
      pairs.emplace_back(v, other);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return InterventionSpec(std::move(pairs));
}

Formula FormulaGenerator::co(std::size_t depth) {
  if (depth == 0) return literal();
  switch (below(6)) {
    case 0: return literal();
    case 1: return Formula::conj(co(depth - 1), co(depth - 1));
    case 2: return Formula::sel(co(depth - 1), co(depth - 1));
    case 3: return Formula::cf(spec(true), co(depth - 1));
    case 4: return tensor_or(co(depth - 1), co(depth - 1));
    default: return dual_neg(co(depth - 1));
  }
}

Formula FormulaGenerator::co_plain(std::size_t depth) {
  if (depth == 0) return literal();
  switch (below(3)) {
    case 0: return literal();
    case 1: return Formula::conj(co_plain(depth - 1), co_plain(depth - 1));
    default: return Formula::sel(co_plain(depth - 1), co_plain(depth - 1));
  }
}

Formula FormulaGenerator::pco(std::size_t depth) {
  if (depth == 0) {
    switch (below(3)) {
      case 0: return literal();
      case 1: return Formula::prob(literal(), below(2) ? Cmp::Gt : Cmp::Ge, rational());
      default: return Formula::prob_cmp(literal(), below(2) ? Cmp::Gt : Cmp::Ge, literal());
    }
  }
  const std::size_t d = depth - 1;
  switch (below(9)) {
    case 0: return literal();
    case 1: return Formula::conj(pco(d), pco(d));
    case 2: return Formula::gor(pco(d), pco(d));
    case 3: return Formula::sel(co(d), pco(d));
    case 4: return Formula::cf(spec(true), pco(d));
    case 5: return Formula::prob(co(d), below(2) ? Cmp::Gt : Cmp::Ge, rational());
    case 6: return Formula::prob_cmp(co(d), below(2) ? Cmp::Gt : Cmp::Ge, co(d));
    case 7: return neg_c(pco(d));
    default: return co(d);
  }
}

Formula FormulaGenerator::pco_plain(std::size_t depth) {
  if (depth == 0) {
    switch (below(3)) {
      case 0: return literal();
      case 1: return Formula::prob(literal(), below(2) ? Cmp::Gt : Cmp::Ge, rational());
      default: return Formula::prob_cmp(literal(), below(2) ? Cmp::Gt : Cmp::Ge, literal());
    }
  }
  const std::size_t d = depth - 1;
  switch (below(6)) {
    case 0: return literal();
    case 1: return Formula::conj(pco_plain(d), pco_plain(d));
    case 2: return Formula::gor(pco_plain(d), pco_plain(d));
    case 3: return Formula::sel(co_plain(d), pco_plain(d));
    case 4: return Formula::prob(co_plain(d), below(2) ? Cmp::Gt : Cmp::Ge, rational());
    default: return Formula::prob_cmp(co_plain(d), below(2) ? Cmp::Gt : Cmp::Ge, co_plain(d));
  }
}

}  // namespace pco
