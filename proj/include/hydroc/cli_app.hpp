// This file is part of hydroc, released under the MIT License.

#ifndef HYDROC_CLI_APP_HPP
#define HYDROC_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hydroc {

/// Run the hydroc command line (compute / sweep / limits / validate) against
/// the given streams. Exit codes: 0 success, 1 invalid state or usage,
/// 2 quadrature non-convergence, 3 validation failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hydroc

#endif
