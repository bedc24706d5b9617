#pragma once

#include "config.hpp"
#include "report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace omzv::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitParseError = 2,
    kExitNotAdmissible = 3,
};

// 0 when every record passes, else 1.
int exit_code(const Report& report);

// Entry point of the omzv tool. `args` excludes the program name. Reports go
// to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env);

// Environment lookup through getenv.
EnvLookup process_env();

}  // namespace omzv::cli
