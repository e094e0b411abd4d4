#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ringlab/algebra.hpp"

namespace ringlab {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success, 1 usage or input error, 2 certificate failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit status for a library error: 2 for certificate failures, 1 otherwise.
int exit_status(const Error& e);

/// Built-in names ("paper@F2", "M2@F3", "UT3@Q") or a path to an algebra-spec file.
Algebra resolve_algebra(const std::string& input);

/// "I", "J", "C" (7x7 example only), "center", "radical", "0", "all", or
/// generators separated by ';' such as "Eb;Ef" or "Ec+Ef;2*Ea".
Subspace parse_subspace(const Algebra& a, const std::string& text, const std::string& option = "--subspace");

}  // namespace ringlab
