// Runs every acceptance criterion once and prints one PASS/FAIL line each.
// Exit status is non-zero when any criterion fails.

#include "cli_checks.hpp"

#include "config.hpp"
#include "report.hpp"
#include "suites.hpp"

#include "omzv/value_cache.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace omzv;
using namespace omzv::cli;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = false;
    std::string detail;
};

struct Timed {
    Report report;
    double seconds = 0.0;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Timed run(const std::string& suite, RunConfig cfg, ValueCache* cache = nullptr) {
    cfg.validate();
    Timed t;
    t.report.command = "verify " + suite;
    const auto start = Clock::now();
    run_suite(suite, SuiteEnv{cfg, cache}, t.report);
    t.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return t;
}

RunConfig at_omega(double omega) {
    RunConfig cfg;
    cfg.omega = omega;
    return cfg;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// Summary over the records whose names start with one of the prefixes (all
// records when the list is empty).
Verdict summarize(const std::vector<const Report*>& reports, const std::vector<std::string>& prefixes, double seconds,
                  double limit) {
    std::size_t total = 0, passed = 0;
    double worst = 0.0;
    std::string first_failure;
    for (const Report* rep : reports)
        for (const Record& r : rep->records) {
            const bool selected = prefixes.empty() || std::any_of(prefixes.begin(), prefixes.end(),
                                                                  [&](const std::string& p) { return starts_with(r.name, p); });
            if (!selected) continue;
            ++total;
            passed += r.pass ? 1 : 0;
            if (r.tolerance > 0) worst = std::max(worst, r.residual / r.tolerance);
            if (!r.pass && first_failure.empty())
                first_failure = "; first failure: " + r.name + " residual " + fmt(r.residual) + " tol " + fmt(r.tolerance) +
                                (r.note.empty() ? "" : " (" + r.note + ")");
        }
    Verdict o;
    o.pass = total > 0 && passed == total && (limit <= 0 || seconds < limit);
    o.detail = std::to_string(passed) + "/" + std::to_string(total) + " checks, worst residual/tolerance " + fmt(worst) +
               ", " + fmt(seconds) + " s" + (limit > 0 ? " (limit " + fmt(limit) + " s)" : "") + first_failure;
    return o;
}

Verdict summarize(const Timed& t, const std::vector<std::string>& prefixes = {}, double limit = 0.0) {
    return summarize({&t.report}, prefixes, t.seconds, limit);
}

const Record* find(const Report& rep, const std::string& name) {
    for (const Record& r : rep.records)
        if (r.name == name) return &r;
    return nullptr;
}

}  // namespace

int main() {
    const auto scratch = std::filesystem::temp_directory_path() / "omzv_acceptance";
    std::filesystem::remove_all(scratch);
    std::filesystem::create_directories(scratch);
    ValueCache cache(scratch / "values.jsonl");

    std::vector<std::pair<std::string, std::function<Verdict()>>> criteria;

    criteria.emplace_back("exact algebra: Satoh identity, all pairs up to weight 4", [] {
        RunConfig cfg;
        cfg.max_weight = 4;
        const Timed t = run("algebra", cfg);
        return summarize(t, {"satoh"}, 30.0);
    });

    criteria.emplace_back("quadrature kernel at 10 values of alpha", [] { return summarize(run("kernel", RunConfig{}), {}, 5.0); });

    criteria.emplace_back("duality at omega 0.3, 1, 1.7, weight <= 4", [&] {
        std::vector<Timed> runs;
        double seconds = 0.0;
        for (double omega : {0.3, 1.0, 1.7}) {
            runs.push_back(run("duality", at_omega(omega), &cache));
            seconds += runs.back().seconds;
        }
        std::vector<const Report*> reps;
        for (const Timed& t : runs) reps.push_back(&t.report);
        return summarize(reps, {}, seconds, 600.0);
    });

    criteria.emplace_back("shuffle, harmonic and double shuffle, total weight <= 5", [&] {
        std::vector<Timed> runs;
        double seconds = 0.0;
        for (double omega : {0.3, 1.0, 1.7})
            for (const char* suite : {"shuffle", "harmonic", "double-shuffle"}) {
                runs.push_back(run(suite, at_omega(omega), &cache));
                seconds += runs.back().seconds;
            }
        std::vector<const Report*> reps;
        for (const Timed& t : runs) reps.push_back(&t.report);
        return summarize(reps, {}, seconds, 600.0);
    });

    criteria.emplace_back("reduced against direct evaluation, alpha, beta <= 2, r <= 2", [&] {
        std::vector<Timed> runs;
        double seconds = 0.0;
        for (double omega : {0.3, 1.0, 1.7}) {
            runs.push_back(run("reduced", at_omega(omega), &cache));
            seconds += runs.back().seconds;
        }
        std::vector<const Report*> reps;
        for (const Timed& t : runs) reps.push_back(&t.report);
        return summarize(reps, {}, seconds, 0.0);
    });

    criteria.emplace_back("q-model products and duality at q = 1/2, N = 400",
                          [] { return summarize(run("qseries", RunConfig{})); });

    criteria.emplace_back("limit trend over omega 0.2, 0.1, 0.05, 0.02", [&] {
        const Timed t = run("limit", RunConfig{}, &cache);
        Verdict o = summarize(t);
        if (const Record* last = find(t.report, "limit zeta(2) omega 0.05 -> 0.02")) o.detail += "; final " + last->note;
        return o;
    });

    criteria.emplace_back("omega = 1 rationality witness for Z(g2)", [&] {
        const Timed t = run("rationality", RunConfig{}, &cache);
        Verdict o = summarize(t);
        const Record* g2 = find(t.report, "rationality G2");
        o.pass = o.pass && g2 && g2->pass;
        if (g2) o.detail += "; Z_1(g2) residual " + fmt(g2->residual);
        return o;
    });

    criteria.emplace_back("hyperbolic gamma: reflection, shifts, asymptotics at omega 1, 0.8, 1.25", [] {
        std::vector<Timed> runs;
        double seconds = 0.0;
        for (double omega : {1.0, 0.8, 1.25}) {
            runs.push_back(run("gamma", at_omega(omega)));
            seconds += runs.back().seconds;
        }
        std::vector<const Report*> reps;
        for (const Timed& t : runs) reps.push_back(&t.report);
        return summarize(reps, {}, seconds, 30.0);
    });

    criteria.emplace_back("Saalschutz identity at three preset points",
                          [] { return summarize(run("saalschutz", RunConfig{}), {}, 120.0); });

    // Criteria 11, 13 and 14 read the same ohno run.
    Timed ohno;
    bool ohno_done = false;
    auto ohno_run = [&]() -> const Timed& {
        if (!ohno_done) {
            ohno = run("ohno", RunConfig{}, &cache);
            ohno_done = true;
        }
        return ohno;
    };

    criteria.emplace_back("initial relation, k = (1), (2), three points", [&] {
        const Timed& t = ohno_run();
        return summarize({&t.report}, {"initial relation"}, t.seconds, 600.0);
    });

    criteria.emplace_back("transport relations, k, l in {(1), (2)}", [] { return summarize(run("transport", RunConfig{})); });

    criteria.emplace_back("Ohno instances and extended double Ohno through m + n <= 2", [&] {
        const Timed& t = ohno_run();
        const Timed ext = run("extended-do", RunConfig{}, &cache);
        return summarize({&t.report, &ext.report}, {"zeta(4) = zeta(1,3) + zeta(2,2)", "ohno sum", "extended double ohno"},
                         t.seconds + ext.seconds, 0.0);
    });

    criteria.emplace_back("Ohno generating integral against its double series, k = (2)", [&] {
        const Timed& t = ohno_run();
        return summarize({&t.report}, {"ohno generating"}, t.seconds, 0.0);
    });

    criteria.emplace_back("CLI: golden report, cache determinism, exit codes", [&] {
        const auto start = Clock::now();
        std::string problems;
        for (const std::string& e :
             {cli_checks::golden_report(), cli_checks::cache_determinism(scratch / "cli"), cli_checks::exit_codes()})
            if (!e.empty()) problems += (problems.empty() ? "" : "; ") + e;
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return Verdict{problems.empty(), (problems.empty() ? "golden, cache and exit-code checks pass" : problems) +
                                             ", " + fmt(seconds) + " s"};
    });

    int failed = 0;
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        Verdict o;
        try {
            o = criteria[j].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("criterion %2zu %s  %s: %s\n", j + 1, o.pass ? "PASS" : "FAIL", criteria[j].first.c_str(),
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    std::filesystem::remove_all(scratch);
    return failed == 0 ? 0 : 1;
}
