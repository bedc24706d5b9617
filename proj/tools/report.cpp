#include "report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace omzv::cli {

namespace {

using nlohmann::json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
    std::size_t n = 0;
    for (const Record& r : records) n += r.pass ? 0 : 1;
    return n;
}

Outcome absolute(cdouble lhs, cdouble rhs, double tolerance, std::string note) {
    const double res = std::abs(lhs - rhs);
    return {lhs, rhs, res, tolerance, res <= tolerance, std::move(note)};
}

Outcome relative(cdouble lhs, cdouble rhs, double tolerance, std::string note) {
    const double res = std::abs(lhs - rhs) / std::abs(rhs);
    return {lhs, rhs, res, tolerance, res <= tolerance, std::move(note)};
}

void run_check(Report& report, std::string name, std::string anchor, const std::function<Outcome()>& check) {
    const auto start = std::chrono::steady_clock::now();
    Record rec;
    rec.name = std::move(name);
    rec.anchor = std::move(anchor);
    try {
        Outcome o = check();
        rec.lhs = o.lhs;
        rec.rhs = o.rhs;
        rec.residual = o.residual;
        rec.tolerance = o.tolerance;
        // NaN residuals never pass.
        rec.pass = o.pass && !std::isnan(o.residual);
        rec.note = std::move(o.note);
    } catch (const std::exception& e) {
        rec.lhs = rec.rhs = std::nan("");
        rec.residual = std::nan("");
        rec.pass = false;
        rec.note = std::string("error: ") + e.what();
    }
    rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.records.push_back(std::move(rec));
}

json complex_json(cdouble z) { return json::array({number(z.real()), number(z.imag())}); }

json eval_json(const EvalResult& r) {
    json eps = json::array();
    for (double e : r.meta.eps) eps.push_back(e);
    return {{"value", complex_json(r.value)},
            {"err_estimate", number(r.err_estimate)},
            {"meta", {{"eps", eps}, {"half_width", r.meta.half_width}, {"nodes", r.meta.nodes}, {"step", r.meta.step}}}};
}

json to_json(const Report& report) {
    json records = json::array();
    for (const Record& r : report.records)
        records.push_back({{"name", r.name},
                           {"anchor", r.anchor},
                           {"lhs", complex_json(r.lhs)},
                           {"rhs", complex_json(r.rhs)},
                           {"residual", number(r.residual)},
                           {"tolerance", number(r.tolerance)},
                           {"pass", r.pass},
                           {"runtime_ms", number(r.runtime_ms)},
                           {"note", r.note}});
    return {{"command", report.command},
            {"config", report.config},
            {"records", records},
            {"result", report.result},
            {"summary", {{"checks", report.records.size()}, {"failed", report.failures()}, {"pass", report.all_pass()}}},
            {"warnings", report.warnings},
            {"timestamp", report.timestamp}};
}

std::string to_csv(const Report& report) {
    std::ostringstream out;
    if (report.records.empty()) {
        out << "key,value\n";
        const json flat = to_json(report).flatten();
        for (const auto& [key, value] : flat.items())
            out << csv_field(key) << ',' << csv_field(value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        return out.str();
    }
    out << "name,anchor,lhs_re,lhs_im,rhs_re,rhs_im,residual,tolerance,pass,runtime_ms,note\n";
    for (const Record& r : report.records)
        out << csv_field(r.name) << ',' << csv_field(r.anchor) << ',' << fmt(r.lhs.real()) << ',' << fmt(r.lhs.imag())
            << ',' << fmt(r.rhs.real()) << ',' << fmt(r.rhs.imag()) << ',' << fmt(r.residual) << ','
            << fmt(r.tolerance) << ',' << (r.pass ? "true" : "false") << ',' << fmt(r.runtime_ms) << ','
            << csv_field(r.note) << '\n';
    return out.str();
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace omzv::cli
