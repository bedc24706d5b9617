#include "cli.hpp"

#include "suites.hpp"

#include "omzv/errors.hpp"
#include "omzv/hyperbolic_gamma.hpp"
#include "omzv/ohno_connector.hpp"
#include "omzv/omega_mzv.hpp"
#include "omzv/reference_series.hpp"
#include "omzv/value_cache.hpp"
#include "omzv/word_algebra.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>

namespace omzv::cli {

namespace {

using nlohmann::json;

struct Command {
    std::string verb;
    std::string kind;
    std::string expression;
    std::string lam = "0.002+0.001i";
    std::string mu = "-0.001+0.002i";
};

json eval_word(const std::string& text, MzvEvaluator& z) {
    // "E G2" style first, then words in a and b.
    try {
        const AMonomial m = parse_amonomial(text);
        json r = eval_json(z.monomial(m));
        r["canonical"] = m.str();
        return r;
    } catch (const ParseError& first) {
        HPoly w;
        try {
            w = parse_hpoly(text);
        } catch (const ParseError&) {
            throw first;
        }
        json r = eval_json(z.word(w));
        r["canonical"] = to_string(w);
        return r;
    }
}

json cmd_eval(const Command& cmd, const RunConfig& cfg, ValueCache* cache) {
    json result{{"kind", cmd.kind}, {"expression", cmd.expression}};
    if (cmd.kind == "mzv") {
        const Index k = parse_index(cmd.expression);
        const SeriesValue v = mzv(k);
        result["value"] = complex_json(v.value);
        result["err_estimate"] = v.tail;
        return result;
    }
    MzvEvaluator z(OmegaParam(cfg.omega), cfg.quad(), cache);
    result["omega"] = cfg.omega;
    if (cmd.kind == "zeta") {
        const Index k = parse_index(cmd.expression);
        result.update(eval_json(z.zeta(k)));
    } else if (cmd.kind == "word") {
        result.update(eval_word(cmd.expression, z));
    } else {
        throw ParseError("unknown eval kind '" + cmd.kind + "' (expected zeta, word or mzv)");
    }
    return result;
}

json cmd_gamma(const Command& cmd, const RunConfig& cfg) {
    const cdouble z = parse_complex(cmd.expression);
    const GammaContext ctx{OmegaParam(cfg.omega)};
    const cdouble g = ctx.G(z);
    return {{"z", complex_json(z)},
            {"omega", cfg.omega},
            {"G", complex_json(g)},
            {"log_G", g == cdouble(0.0) ? json(nullptr) : complex_json(ctx.log_G(z))}};
}

json cmd_ohno(const Command& cmd, const RunConfig& cfg, ValueCache* cache) {
    const Index k = parse_index(cmd.expression);
    if (!k.admissible()) throw DomainError("index (" + k.str() + ") is not admissible");
    const OmegaParam p(cfg.omega);
    const OhnoParams op{parse_complex(cmd.lam), parse_complex(cmd.mu), cfg.order, cfg.eps};
    MzvEvaluator z(p, cfg.quad(), cache);
    const OhnoTable table = ohno_table(k, cfg.order, z);
    json cells = json::array();
    for (const auto& [mn, v] : table.cells())
        cells.push_back({{"m", mn.first}, {"n", mn.second}, {"value", complex_json(v.first)}, {"err_estimate", v.second}});
    return {{"index", k.str()},
            {"omega", cfg.omega},
            {"lam", complex_json(op.lam)},
            {"mu", complex_json(op.mu)},
            {"order", cfg.order},
            {"table", cells},
            {"integral", eval_json(ohno_generating(k, op, p, cfg.quad()))},
            {"series", eval_json(ohno_series(k, op, z))}};
}

json cmd_cache(const Command& cmd, ValueCache* cache) {
    if (!cache) throw ParseError("cache " + cmd.kind + " needs --cache PATH");
    if (cmd.kind == "clear") cache->clear();
    else if (cmd.kind != "stats") throw ParseError("unknown cache action '" + cmd.kind + "' (expected clear or stats)");
    const ValueCache::Stats s = cache->stats();
    return {{"action", cmd.kind}, {"path", cache->path().string()}, {"entries", s.entries}, {"corrupt", s.corrupt}};
}

void emit(const Report& report, const RunConfig& cfg, std::ostream& out) {
    const std::string text = cfg.format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::trunc);
    if (!file) throw Error("cannot write report to " + cfg.out);
    file << text;
}

}  // namespace

int exit_code(const Report& report) { return report.all_pass() ? kExitOk : kExitCheckFailed; }

EnvLookup process_env() {
    return [](const std::string& name) -> std::optional<std::string> {
        const char* v = std::getenv(name.c_str());
        return v ? std::optional<std::string>(v) : std::nullopt;
    };
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
    CLI::App app{"Numerical and symbolic tools for omega-deformed multiple zeta values", "omzv"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "omzv 1.0");

    Settings flags;
    std::string config_path;
    auto add_flag = [&](CLI::App& target, const std::string& key, const std::string& help) {
        target.add_option_function<std::string>("--" + key, [&flags, key](const std::string& v) { flags[key] = v; }, help);
    };
    add_flag(app, "omega", "deformation parameter omega > 0");
    add_flag(app, "tol", "relative quadrature tolerance");
    add_flag(app, "eps", "contour offset (0 selects the default)");
    add_flag(app, "max-weight", "largest weight in verification batteries");
    add_flag(app, "order", "truncation order m + n of Ohno tables");
    add_flag(app, "seed", "seed for generic evaluation points");
    add_flag(app, "out", "write the report to this file");
    add_flag(app, "cache", "persistent value cache (JSON lines)");
    add_flag(app, "format", "json or csv");
    app.add_option("--config", config_path, "key = value settings file");

    Command cmd;
    CLI::App* eval = app.add_subcommand("eval", "evaluate zeta_omega(k), Z_omega(word) or a classical MZV");
    eval->add_option("kind", cmd.kind, "zeta, word or mzv")->required();
    eval->add_option("expression", cmd.expression, "index such as 1,3,2 or word such as 'E G2'")->required();
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite_help = "one of: all";
    for (const auto& s : suite_names()) suite_help += ", " + s;
    verify->add_option("suite", cmd.kind, suite_help)->required();
    CLI::App* gamma = app.add_subcommand("gamma", "evaluate the hyperbolic gamma function G(z | 1, 1/omega)");
    gamma->add_option("z", cmd.expression, "complex point such as 0.2+0.3i")->required();
    CLI::App* ohno = app.add_subcommand("ohno", "Ohno table, generating integral and its series");
    ohno->add_option("index", cmd.expression, "admissible index such as 2 or 1,2")->required();
    ohno->add_option("--lam", cmd.lam, "lambda");
    ohno->add_option("--mu", cmd.mu, "mu");
    CLI::App* cache_cmd = app.add_subcommand("cache", "inspect or clear the value cache");
    cache_cmd->add_option("action", cmd.kind, "clear or stats")->required();
    for (CLI::App* sub : {eval, verify, gamma, ohno, cache_cmd}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    for (CLI::App* sub : {eval, verify, gamma, ohno, cache_cmd})
        if (sub->parsed()) cmd.verb = sub->get_name();

    try {
        if (config_path.empty())
            if (auto p = env("OMZV_CONFIG")) config_path = *p;
        const Settings file = config_path.empty() ? Settings{} : read_config_file(config_path);
        const RunConfig cfg = resolve(file, env_settings(env), flags);

        std::unique_ptr<ValueCache> cache;
        if (!cfg.cache.empty()) cache = std::make_unique<ValueCache>(cfg.cache);

        Report report;
        report.command = cmd.verb + " " + cmd.kind + (cmd.kind.empty() || cmd.expression.empty() ? "" : " ") + cmd.expression;
        report.config = cfg.to_json();
        if (cache)
            for (const std::string& w : cache->warnings()) report.warnings.push_back(w);

        if (cmd.verb == "eval") report.result = cmd_eval(cmd, cfg, cache.get());
        else if (cmd.verb == "gamma") report.result = cmd_gamma(cmd, cfg);
        else if (cmd.verb == "ohno") report.result = cmd_ohno(cmd, cfg, cache.get());
        else if (cmd.verb == "cache") report.result = cmd_cache(cmd, cache.get());
        else run_suite(cmd.kind, SuiteEnv{cfg, cache.get()}, report);

        report.timestamp = utc_timestamp();
        for (const std::string& w : report.warnings) err << "warning: " << w << "\n";
        emit(report, cfg, out);
        if (cmd.verb != "verify") return kExitOk;
        err << "verify " << cmd.kind << ": " << report.records.size() - report.failures() << "/" << report.records.size()
            << " checks passed\n";
        for (const Record& r : report.records)
            if (!r.pass) err << "FAIL " << r.name << ": residual " << r.residual << " > " << r.tolerance << " " << r.note << "\n";
        return exit_code(report);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNotAdmissible;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}

}  // namespace omzv::cli
