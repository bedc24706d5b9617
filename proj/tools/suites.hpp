#pragma once

#include "config.hpp"
#include "report.hpp"

#include <string>
#include <vector>

namespace omzv {
class ValueCache;
}

namespace omzv::cli {

struct SuiteEnv {
    const RunConfig& cfg;
    ValueCache* cache = nullptr;  // optional persistent store
};

// Suite names accepted by `verify`, without "all".
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Appends the records of one suite, or of every suite for "all". Throws
// ParseError for unknown names.
void run_suite(const std::string& name, const SuiteEnv& env, Report& report);

}  // namespace omzv::cli
