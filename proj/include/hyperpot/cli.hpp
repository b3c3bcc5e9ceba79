#ifndef HYPERPOT_CLI_HPP
#define HYPERPOT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hyperpot {

/// Run the hyperpot command line. Exit codes: 0 success, 1 domain error
/// (machine-readable JSON on err), 2 usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyperpot

#endif
