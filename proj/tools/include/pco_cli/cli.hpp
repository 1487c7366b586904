#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pco::cli {

/// Runs one `pco` invocation. `args` excludes the program name. Returns the
/// exit code: 0 true/valid/success, 1 false/countermodel, 2 usage or input error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pco::cli
