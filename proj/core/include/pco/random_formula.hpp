#pragma once

#include <cstdint>
#include <random>

#include "pco/formula.hpp"

namespace pco {

struct RandomFormulaOptions {
  std::size_t max_depth = 4;
  unsigned max_denominator = 6;
  std::size_t max_spec_pairs = 2;
  /// Chance (in percent) that a generated spec binds one variable twice.
  unsigned inconsistent_spec_percent = 10;
};

/// Seeded generator of random formulas over a signature; the same seed and
/// options give the same sequence.
class FormulaGenerator {
public:
  FormulaGenerator(SignaturePtr sig, std::uint64_t seed, RandomFormulaOptions options = {});

  const Signature& signature() const { return *sig_; }
  std::mt19937_64& engine() { return rng_; }

  Formula co() { return co(options_.max_depth); }
  Formula co(std::size_t depth);
  /// CO without counterfactuals.
  Formula co_plain(std::size_t depth);
  Formula pco() { return pco(options_.max_depth); }
  Formula pco(std::size_t depth);
  /// PCO with no ▷ anywhere, including inside Pr arguments and antecedents.
  Formula pco_plain(std::size_t depth);

  Formula literal();
  Var variable();
  Val value(Var v);
  /// p/q with 1 ≤ q ≤ max_denominator, in [0,1].
  Rational rational();
  /// A spec with 1..max_spec_pairs pairs; consistent unless `allow_inconsistent`
  /// and the dice say otherwise.
  InterventionSpec spec(bool allow_inconsistent = false);

  std::size_t below(std::size_t n);  // uniform in [0, n)

private:
  SignaturePtr sig_;
  std::mt19937_64 rng_;
  RandomFormulaOptions options_;
};

}  // namespace pco
