#pragma once

#include <string>
#include <string_view>

#include "pco/canonical.hpp"
#include "pco/model.hpp"

namespace pco {

// Line-based text formats; `#` starts a comment. Sections open with a line
// holding only their name:
//
//   signature            X: 0 1 2        (variable, then its values in order)
//   laws                 Y <- 0 0 -> 1, 0 1 -> 1, ...
//                        (argument values follow the signature order without
//                        Y; every tuple exactly once; a trailing comma
//                        continues the table on the next line)
//   team                 2: 1 2 2        (multiplicity, then one value per variable)
//   weights              1 2 2 : 1/2     (description files only)
//
// Syntax errors are ParseErrors whose spans are byte offsets into the text.

/// The signature section of a signature, model or description file.
SignaturePtr parse_signature(std::string_view text);
std::string write_signature(const Signature& sig);

/// Parses and validates (validate_model) a model file.
CausalMultiteam parse_model(std::string_view text);
std::string write_model(const CausalMultiteam& model);

/// Signature, weights and laws. Weight sums are checked by build_canonical.
AtomicDescription parse_description(std::string_view text);
std::string write_description(const AtomicDescription& desc);

}  // namespace pco
