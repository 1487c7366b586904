#pragma once

#include <string>

#include "pco/formula.hpp"

namespace pco {

/// Concrete syntax accepted by parse_formula; parse(print(φ)) == φ.
/// Re-sugars TOP, BOT, ~α and α \/ β when the expanded shape is exact.
std::string print_formula(const Formula& phi, const Signature& sig);

/// `X=1,Y=2`
std::string print_spec(const InterventionSpec& spec, const Signature& sig);

}  // namespace pco
