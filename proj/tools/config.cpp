#include "config.hpp"

#include "omzv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace omzv::cli {

namespace {

std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

bool known_key(const std::string& key) {
    const auto& keys = config_keys();
    return std::find(keys.begin(), keys.end(), key) != keys.end();
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "omega") cfg.omega = parse_real(value, key);
    else if (key == "tol") cfg.tol = parse_real(value, key);
    else if (key == "eps") cfg.eps = parse_real(value, key);
    else if (key == "max-weight") cfg.max_weight = static_cast<int>(parse_integer(value, key));
    else if (key == "order") cfg.order = static_cast<int>(parse_integer(value, key));
    else if (key == "seed") {
        const long long s = parse_integer(value, key);
        if (s < 0) throw ParseError("seed must be non-negative");
        cfg.seed = static_cast<std::uint64_t>(s);
    } else if (key == "out") cfg.out = value;
    else if (key == "cache") cfg.cache = value;
    else if (key == "format") cfg.format = value;
    else throw ParseError("unknown setting '" + key + "'");
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys{"omega", "tol", "eps", "max-weight", "order",
                                               "seed",  "out", "cache", "format"};
    return keys;
}

std::string env_name(std::string_view key) {
    std::string name = "OMZV_";
    for (char c : key) name += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return name;
}

void RunConfig::validate() const {
    if (!(omega > 0.0) || !std::isfinite(omega)) throw ParseError("omega must be a positive number");
    if (!(tol > 0.0 && tol < 1.0)) throw ParseError("tol must lie in (0, 1)");
    if (!(eps >= 0.0) || !std::isfinite(eps)) throw ParseError("eps must be non-negative (0 selects the default)");
    if (max_weight < 1 || max_weight > 6) throw ParseError("max-weight must lie in 1..6");
    if (order < 0 || order > 4) throw ParseError("order must lie in 0..4");
    if (format != "json" && format != "csv") throw ParseError("format must be json or csv");
}

QuadConfig RunConfig::quad() const {
    QuadConfig q;
    q.rel_tol = tol;
    q.abs_tol = std::min(q.abs_tol, tol);
    q.eps = eps;
    q.validate();
    return q;
}

nlohmann::json RunConfig::to_json() const {
    return {{"omega", omega}, {"tol", tol},     {"eps", eps},       {"max_weight", max_weight},
            {"order", order}, {"seed", seed},   {"fingerprint", quad().fingerprint()}};
}

Settings parse_config_text(std::string_view text) {
    Settings out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(std::string_view(body).substr(0, eq));
        std::replace(key.begin(), key.end(), '_', '-');
        if (!known_key(key)) throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        out[key] = trim(std::string_view(body).substr(eq + 1));
    }
    return out;
}

Settings read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read config file " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str());
}

Settings env_settings(const EnvLookup& env) {
    Settings out;
    for (const std::string& key : config_keys())
        if (auto v = env(env_name(key)); v && !v->empty()) out[key] = *v;
    return out;
}

RunConfig resolve(const Settings& file, const Settings& env, const Settings& flags) {
    RunConfig cfg;
    for (const Settings* layer : {&file, &env, &flags})
        for (const auto& [key, value] : *layer) apply(cfg, key, value);
    cfg.validate();
    return cfg;
}

double parse_real(std::string_view text, std::string_view what) {
    const std::string s = trim(text);
    if (s.empty()) throw ParseError("empty value for " + std::string(what));
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
        throw ParseError("invalid number '" + s + "' for " + std::string(what));
    return v;
}

long long parse_integer(std::string_view text, std::string_view what) {
    const std::string s = trim(text);
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
        throw ParseError("invalid integer '" + s + "' for " + std::string(what));
    return v;
}

cdouble parse_complex(std::string_view text) {
    std::string s = trim(text);
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s.empty()) throw ParseError("empty complex number");
    if (auto comma = s.find(','); comma != std::string::npos)
        return {parse_real(s.substr(0, comma), "real part"), parse_real(s.substr(comma + 1), "imaginary part")};
    if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, "complex number"), 0.0};
    s.pop_back();
    // Split at the last sign that is not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    auto imag_of = [](std::string part) {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return parse_real(part, "imaginary part");
    };
    if (split == std::string::npos) return {0.0, imag_of(s)};
    return {parse_real(s.substr(0, split), "real part"), imag_of(s.substr(split))};
}

}  // namespace omzv::cli
