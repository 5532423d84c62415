#ifndef ADMRANK_CLI_HPP
#define ADMRANK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace admrank::cli {

/// Run the admrank command line. Exit codes: 0 success, 2 parse errors,
/// 3 domain errors (ZeroForm, NotSigmaStable, NotAPencil, ...), 4 when the
/// real rank is only determined up to an interval (result still printed).
/// Machine-readable output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace admrank::cli

#endif
