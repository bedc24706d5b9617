#pragma once

#include "omzv/contour_quad.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace omzv::cli {

struct Record {
    std::string name;
    std::string anchor;  // the identity being checked, in words
    cdouble lhs;
    cdouble rhs;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double runtime_ms = 0.0;
    std::string note;
};

struct Report {
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    std::vector<Record> records;
    nlohmann::json result = nlohmann::json::object();  // payload of eval, gamma, ohno and cache
    std::vector<std::string> warnings;
    std::string timestamp;

    bool all_pass() const;
    std::size_t failures() const;
};

// Outcome of one check before timing is attached.
struct Outcome {
    cdouble lhs;
    cdouble rhs;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

// |lhs - rhs| <= tolerance.
Outcome absolute(cdouble lhs, cdouble rhs, double tolerance, std::string note = {});
// |lhs - rhs| / |rhs| <= tolerance.
Outcome relative(cdouble lhs, cdouble rhs, double tolerance, std::string note = {});

// Runs `check`, timing it; an exception becomes a failed record carrying the
// message.
void run_check(Report& report, std::string name, std::string anchor, const std::function<Outcome()>& check);

nlohmann::json complex_json(cdouble z);
nlohmann::json eval_json(const EvalResult& r);
nlohmann::json to_json(const Report& report);
// One row per record, or the flattened result for reports without records.
std::string to_csv(const Report& report);
std::string utc_timestamp();

}  // namespace omzv::cli
