#pragma once

#include <string_view>

#include "pco/formula.hpp"

namespace pco {

/// Parses the concrete formula syntax against `sig`; defined operators are
/// expanded on the fly. Throws ParseError (SyntaxError, UnknownVariable,
/// ValueOutOfRange, CoFragmentViolation), always with a span.
///
///   literals      X=1   X!=1
///   prefix        [X=1,Y=2] φ    ~α (CO negation)    !φ (φ^C)
///   binary        &   then  \/ (CO) and ||   then  => -> <-> <=> (right-assoc)
///   probability   P(α) >= 1/2   P(α) > P(β)   also <=, <, =, !=
///                 P(α | γ) >= 1/2   P(α | γ) >= P(β | γ)
///   constants     TOP  BOT
Formula parse_formula(std::string_view text, const Signature& sig);

/// `X=1,Y=2` (brackets optional).
InterventionSpec parse_intervention(std::string_view text, const Signature& sig);

}  // namespace pco
