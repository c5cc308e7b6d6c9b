#pragma once

#include <string>
#include <vector>

namespace pxp {

struct CliResult {
    int exit_code;       // 0 ok, 2 usage/parse, 3 domain rejection, 4 resource limit
    std::string output;  // JSON (or CSV) on success, diagnostic JSON otherwise
};

/// Runs one CLI invocation; args excludes the program name. Output assembly is
/// deterministic: identical flags yield byte-identical output.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace pxp
