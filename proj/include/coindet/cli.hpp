#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coindet::cli {

/* Runs one command-line invocation (arguments without the program name) and
 * writes the report to `out`. Exit code: 0 ran and passed, 1 usage or syntax
 * error, 2 domain refusal or failed check. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coindet::cli
