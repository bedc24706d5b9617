#pragma once

// Helpers shared by the CLI unit tests and the acceptance binary. Each check
// returns an empty string on success and a description of the first problem
// otherwise.

#include "cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace cli_checks {

using nlohmann::json;

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

inline Run run(const std::vector<std::string>& args, const std::map<std::string, std::string>& env = {}) {
    std::ostringstream out, err;
    const auto lookup = [&env](const std::string& name) -> std::optional<std::string> {
        auto it = env.find(name);
        return it == env.end() ? std::nullopt : std::optional<std::string>(it->second);
    };
    Run r;
    r.code = omzv::cli::run_cli(args, out, err, lookup);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Drops the fields that legitimately change between runs.
inline json normalized(const json& report) {
    json copy = report;
    copy["timestamp"] = "";
    for (auto& rec : copy["records"]) rec["runtime_ms"] = 0;
    return copy;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

inline std::string type_name(const json& v) {
    if (v.is_null()) return "null";
    if (v.is_boolean()) return "boolean";
    if (v.is_number()) return "number";
    if (v.is_string()) return "string";
    if (v.is_array()) return "array";
    return "object";
}

// Same key set with the listed types.
inline std::string match_schema(const json& value, const json& schema, const std::string& where) {
    if (!value.is_object()) return where + " is not an object";
    for (const auto& [key, type] : schema.items()) {
        if (!value.contains(key)) return where + " lacks key '" + key + "'";
        if (type_name(value[key]) != type.get<std::string>())
            return where + "." + key + " has type " + type_name(value[key]) + ", expected " + type.get<std::string>();
    }
    for (const auto& [key, v] : value.items())
        if (!schema.contains(key)) return where + " has unexpected key '" + key + "'";
    return {};
}

inline std::filesystem::path golden_dir() { return OMZV_GOLDEN_DIR; }

// The exact algebra report at weight 2 against its golden copy, and the
// structure of verify and eval reports against the schema file.
inline std::string golden_report() {
    const Run r = run({"verify", "algebra", "--max-weight", "2"});
    if (r.code != 0) return "verify algebra exited with " + std::to_string(r.code) + ": " + r.err;
    const json report = json::parse(r.out);
    const json golden = json::parse(read_file(golden_dir() / "verify_algebra_w2.json"));
    if (normalized(report) != golden) return "verify algebra report differs from golden/verify_algebra_w2.json";

    const json schema = json::parse(read_file(golden_dir() / "report_schema.json"));
    if (auto e = match_schema(report, schema["report"], "report"); !e.empty()) return e;
    if (auto e = match_schema(report["summary"], schema["summary"], "summary"); !e.empty()) return e;
    for (const auto& rec : report["records"])
        if (auto e = match_schema(rec, schema["record"], "record"); !e.empty()) return e;

    const Run ev = run({"eval", "zeta", "2", "--omega", "1"});
    if (ev.code != 0) return "eval zeta 2 exited with " + std::to_string(ev.code);
    const json er = json::parse(ev.out);
    if (auto e = match_schema(er, schema["report"], "eval report"); !e.empty()) return e;
    if (auto e = match_schema(er["result"], schema["eval_result"], "eval result"); !e.empty()) return e;
    return {};
}

// Repeated runs against the same cache give identical reports; a different
// fingerprint misses; clearing empties the store.
inline std::string cache_determinism(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const std::string cache = (dir / "values.jsonl").string();
    std::filesystem::remove(cache);

    auto entries = [&]() -> long {
        const Run s = run({"cache", "stats", "--cache", cache});
        if (s.code != 0) return -1;
        return json::parse(s.out)["result"]["entries"].get<long>();
    };

    const std::vector<std::string> verify{"verify", "ohno", "--cache", cache};
    const Run first = run(verify);
    if (first.code != 0) return "first verify ohno run exited with " + std::to_string(first.code) + ": " + first.err;
    const long stored = entries();
    if (stored <= 0) return "verify ohno stored no cache entries";
    const Run second = run(verify);
    if (second.code != 0) return "second verify ohno run exited with " + std::to_string(second.code);
    if (entries() != stored) return "second run added cache entries instead of hitting";
    if (normalized(json::parse(first.out)).dump(2) != normalized(json::parse(second.out)).dump(2))
        return "reports of the cold and warm runs differ";

    const Run eval1 = run({"eval", "zeta", "1,2", "--cache", cache});
    const long after_eval = entries();
    const Run eval2 = run({"eval", "zeta", "1,2", "--cache", cache});
    if (eval1.code != 0 || eval2.code != 0) return "eval zeta 1,2 failed";
    if (normalized(json::parse(eval1.out)) != normalized(json::parse(eval2.out))) return "cached eval differs";
    if (entries() != after_eval) return "repeated eval added cache entries";
    const Run other = run({"eval", "zeta", "1,2", "--cache", cache, "--tol", "1e-9"});
    if (other.code != 0) return "eval with another tolerance failed";
    if (entries() <= after_eval) return "a new fingerprint did not create new entries";

    const Run clear = run({"cache", "clear", "--cache", cache});
    if (clear.code != 0) return "cache clear failed";
    if (entries() != 0) return "cache clear left entries behind";
    if (std::filesystem::exists(cache)) return "cache clear left the file behind";
    return {};
}

// 0 success, 1 failed check, 2 parse errors and unknown suites, 3 inputs
// outside the domain.
inline std::string exit_codes() {
    struct Case {
        std::vector<std::string> args;
        int code;
    };
    const std::vector<Case> cases{
        {{"eval", "zeta", "2", "--omega", "1"}, 0},
        {{"eval", "word", "E G2", "--omega", "0.5"}, 0},
        {{"verify", "algebra", "--max-weight", "2"}, 0},
        {{"eval", "zeta", "2,,"}, 2},
        {{"eval", "word", "E Q2"}, 2},
        {{"verify", "nosuch"}, 2},
        {{"eval", "zeta", "2", "--omega", "abc"}, 2},
        {{"eval", "zeta", "2", "--bogus"}, 2},
        {{}, 2},
        {{"eval", "zeta", "1"}, 3},
        {{"eval", "zeta", "2,1"}, 3},
        {{"eval", "word", "G1 E"}, 3},
        {{"eval", "zeta", "2", "--omega", "2.5"}, 3},
        {{"gamma", "--", "0-1i"}, 3},
    };
    for (const Case& c : cases) {
        const Run r = run(c.args);
        if (r.code != c.code) {
            std::string cmd;
            for (const auto& a : c.args) cmd += a + " ";
            return "'" + cmd + "' exited with " + std::to_string(r.code) + ", expected " + std::to_string(c.code);
        }
    }
    omzv::cli::Report failing;
    failing.records.push_back({"x", "y", 1.0, 0.0, 1.0, 0.5, false, 0.0, ""});
    if (omzv::cli::exit_code(failing) != 1) return "a failing record does not map to exit code 1";
    failing.records.back().pass = true;
    if (omzv::cli::exit_code(failing) != 0) return "passing records do not map to exit code 0";
    return {};
}

}  // namespace cli_checks
