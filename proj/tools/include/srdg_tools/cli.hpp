#pragma once

#include <iosfwd>

namespace srdg::tools {

/// Exit codes: 0 valid/feasible, 1 invalid/infeasible, 2 usage or parse
/// error, 3 resource or backend failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srdg::tools
