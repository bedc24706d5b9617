#pragma once

#include "omzv/contour_quad.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace omzv::cli {

// Settings shared by every verb. Resolved from, in decreasing priority,
// command-line flags, OMZV_* environment variables, a key = value config
// file and the defaults below.
struct RunConfig {
    double omega = 1.0;
    double tol = 1e-10;
    double eps = 0.0;  // 0 selects the per-integral default offset
    int max_weight = 4;
    int order = 2;
    std::uint64_t seed = 1;
    std::string out;
    std::string cache;
    std::string format = "json";

    // Throws ParseError for values outside the accepted ranges.
    void validate() const;
    QuadConfig quad() const;
    // Fields that influence reported values; paths are left out.
    nlohmann::json to_json() const;
};

using Settings = std::map<std::string, std::string>;
using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

// Keys accepted in config files and as OMZV_<KEY> variables (dashes become
// underscores, upper case).
const std::vector<std::string>& config_keys();
std::string env_name(std::string_view key);

// Flat "key = value" lines; '#' starts a comment. Throws ParseError on
// malformed lines or unknown keys.
Settings parse_config_text(std::string_view text);
Settings read_config_file(const std::string& path);
Settings env_settings(const EnvLookup& env);

// Later layers override earlier ones.
RunConfig resolve(const Settings& file, const Settings& env, const Settings& flags);

// Strict numeric parsing; throws ParseError.
double parse_real(std::string_view text, std::string_view what);
long long parse_integer(std::string_view text, std::string_view what);
// "0.2+0.3i", "-1e-3i", "0.5", "0.2,0.3".
cdouble parse_complex(std::string_view text);

}  // namespace omzv::cli
