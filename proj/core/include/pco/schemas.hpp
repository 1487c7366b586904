#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pco/oracle.hpp"
#include "pco/random_formula.hpp"

namespace pco {

/// Metavariable fillers for one schema instance. Which slots a schema reads
/// is listed next to its builder in schemas.cpp.
struct SchemaArgs {
  std::vector<Formula> co{};              // α, β, γ
  std::vector<Formula> pco{};             // ψ, χ, φ
  std::vector<Rational> q{};              // δ, ε
  std::vector<InterventionSpec> specs{};  // X=x, Y=y
  std::vector<Var> vars{};
  std::vector<Val> vals{};
  std::size_t variant = 0;                // template or comparison choice
};

/// Axiom schema identifiers, in checking order.
const std::vector<std::string>& schema_ids();

/// Number of templates behind T1 / T2; one otherwise.
std::size_t schema_variants(std::string_view id);

/// One instance, or nothing when a side condition fails (for example
/// δ+ε > 1 in P3). Throws UnknownSchema, or IllTypedArgument when a slot
/// the schema needs is missing.
std::optional<Formula> build_schema(std::string_view id, const Signature& sig, const SchemaArgs& args);

/// Up to `samples` distinct instances. Schemas with finitely many instances
/// over the signature yield all of them when there are at most `samples`,
/// else a seeded sample. Throws UnknownSchema.
std::vector<Formula> instantiate_schema(std::string_view id, const SignaturePtr& sig, std::size_t samples,
                                        std::uint64_t seed);

/// Whether the schema's instances over `sig` form a finite family.
bool schema_is_finite(std::string_view id);

struct InstanceResult {
  std::size_t k;
  Formula formula;
  Verdict verdict;
};

struct SchemaReport {
  std::string id;
  std::uint64_t seed = 0;
  std::vector<InstanceResult> instances;

  std::size_t failures() const;
  bool ok() const { return failures() == 0 && !instances.empty(); }
};

SchemaReport check_schema(std::string_view id, const ModelSpace& space, std::size_t samples, std::uint64_t seed,
                          OracleOptions options = {});

}  // namespace pco
