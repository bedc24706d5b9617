#include "suites.hpp"

#include "omzv/errors.hpp"
#include "omzv/hyperbolic_gamma.hpp"
#include "omzv/ncseries.hpp"
#include "omzv/ohno_connector.hpp"
#include "omzv/omega_mzv.hpp"
#include "omzv/reference_series.hpp"
#include "omzv/value_cache.hpp"
#include "omzv/word_algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <tuple>

namespace omzv::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cdouble kI(0.0, 1.0);

// Numerical relations between omega-MZVs pass within max(floor, 5 * error).
constexpr double kRelationFloor = 1e-6;
constexpr double kErrorFactor = 5.0;
constexpr double kExactOracleTol = 1e-8;
constexpr double kRationalityTol = 1e-6;
constexpr double kGammaTol = 1e-8;
constexpr double kAsymptoticTol = 1e-3;
constexpr double kSaalschutzTol = 1e-5;
constexpr double kInitialTol = 1e-4;
constexpr double kTransportTol = 1e-4;
constexpr double kOhnoInstanceTol = 1e-6;
constexpr double kExtendedTol = 1e-5;
constexpr double kQ = 0.5;
constexpr int kQTruncation = 400;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt(cdouble z) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
    return buf;
}

std::string key_text(cdouble z) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", z.real(), z.imag());
    return buf;
}

AComb single(const AMonomial& m) { return AComb(m); }

double product_err(const EvalResult& a, const EvalResult& b) {
    return std::abs(a.value) * b.err_estimate + std::abs(b.value) * a.err_estimate;
}

Outcome relation(const EvalResult& lhs, cdouble rhs, double rhs_err) {
    const double tol = std::max(kRelationFloor, kErrorFactor * (lhs.err_estimate + rhs_err));
    return absolute(lhs.value, rhs, tol);
}

// Small generic points for the generating-function suites, drawn from the
// configured seed.
std::vector<std::pair<cdouble, cdouble>> generic_points(std::uint64_t seed, int count, double rmin, double rmax) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(rmin, rmax), phase(0.0, 2.0 * kPi);
    std::vector<std::pair<cdouble, cdouble>> out;
    for (int j = 0; j < count; ++j) {
        const cdouble lam = std::polar(radius(rng), phase(rng));
        const cdouble mu = std::polar(radius(rng), phase(rng));
        out.emplace_back(lam, mu);
    }
    return out;
}

std::string cache_key(const SuiteEnv& env, const std::string& expr, double omega) {
    return ValueCache::make_key(expr, omega, env.cfg.quad().fingerprint());
}

EvalResult cached(const SuiteEnv& env, const std::string& expr, double omega, const std::function<EvalResult()>& f) {
    const std::string key = cache_key(env, expr, omega);
    if (env.cache)
        if (auto hit = env.cache->lookup(key)) return *hit;
    EvalResult r = f();
    if (env.cache) env.cache->store(key, r);
    return r;
}

RelationCheck cached_relation(const SuiteEnv& env, const std::string& expr, double omega,
                              const std::function<RelationCheck()>& f) {
    if (env.cache) {
        auto lhs = env.cache->lookup(cache_key(env, expr + ":lhs", omega));
        auto rhs = env.cache->lookup(cache_key(env, expr + ":rhs", omega));
        if (lhs && rhs) return {lhs->value, rhs->value, lhs->err_estimate};
    }
    RelationCheck r = f();
    if (env.cache) {
        env.cache->store(cache_key(env, expr + ":lhs", omega), EvalResult{r.lhs, r.err_estimate, {}});
        env.cache->store(cache_key(env, expr + ":rhs", omega), EvalResult::exact(r.rhs));
    }
    return r;
}

// ---------------------------------------------------------------- algebra

void suite_algebra(const SuiteEnv& env, Report& rep) {
    const int w = env.cfg.max_weight;
    const auto monomials = admissible_monomials_up_to(w);
    std::vector<HPoly> expanded;
    for (const AMonomial& m : monomials) expanded.push_back(expand(m));

    for (int wu = 1; wu <= w; ++wu)
        for (int wv = 1; wv <= w; ++wv)
            run_check(rep, "satoh weights " + std::to_string(wu) + "x" + std::to_string(wv),
                      "harmonic product equals sigma of the shuffle of sigmas", [&] {
                          std::size_t pairs = 0, nonzero = 0;
                          for (std::size_t i = 0; i < monomials.size(); ++i) {
                              if (monomials[i].weight() != wu) continue;
                              for (std::size_t j = 0; j < monomials.size(); ++j) {
                                  if (monomials[j].weight() != wv) continue;
                                  ++pairs;
                                  if (!satoh_residual(expanded[i], expanded[j]).is_zero()) ++nonzero;
                              }
                          }
                          return absolute(static_cast<double>(nonzero), 0.0, 0.0,
                                          "pairs: " + std::to_string(pairs) + "; lhs counts nonzero residuals");
                      });

    run_check(rep, "sigma involution", "sigma(sigma(w)) = w", [&] {
        std::size_t bad = 0;
        for (const HPoly& p : expanded)
            if (!(sigma(sigma(p)) == p)) ++bad;
        return absolute(static_cast<double>(bad), 0.0, 0.0, std::to_string(expanded.size()) + " monomials");
    });

    run_check(rep, "sigma preserves admissible span", "sigma maps admissible monomials to their span", [&] {
        std::size_t bad = 0;
        for (const HPoly& p : expanded)
            if (!in_admissible_span(sigma(p))) ++bad;
        return absolute(static_cast<double>(bad), 0.0, 0.0, std::to_string(expanded.size()) + " monomials");
    });

    run_check(rep, "dual index involution", "k dagger dagger = k, same weight, depth wt - depth", [&] {
        std::size_t bad = 0, count = 0;
        for (int wt = 2; wt <= w + 1; ++wt)
            for (int depth = 1; depth < wt; ++depth)
                for (const auto& c : compositions(wt - depth, depth)) {
                    std::vector<int> parts;
                    for (int x : c) parts.push_back(x + 1);
                    const Index k(parts);
                    if (!k.admissible()) continue;
                    ++count;
                    const Index d = dual_index(k);
                    if (!(dual_index(d) == k) || d.weight() != k.weight() || d.depth() != k.weight() - k.depth()) ++bad;
                }
        return absolute(static_cast<double>(bad), 0.0, 0.0, std::to_string(count) + " indices");
    });

    run_check(rep, "products commute", "u sh v = v sh u and u * v = v * u", [&] {
        std::size_t bad = 0, pairs = 0;
        for (std::size_t i = 0; i < monomials.size(); ++i)
            for (std::size_t j = i + 1; j < monomials.size(); ++j) {
                if (monomials[i].weight() + monomials[j].weight() > w) continue;
                ++pairs;
                const AComb u = single(monomials[i]), v = single(monomials[j]);
                if (!(shuffle(u, v) == shuffle(v, u)) || !(harmonic(u, v) == harmonic(v, u))) ++bad;
            }
        return absolute(static_cast<double>(bad), 0.0, 0.0, std::to_string(pairs) + " pairs");
    });

    run_check(rep, "tau involution", "tau(tau(w)) = w on words in x, y", [&] {
        const int order = std::max(env.cfg.order, 1);
        std::size_t bad = 0, count = 0;
        std::vector<std::string> words{""};
        for (int len = 1; len <= 3; ++len) {
            std::vector<std::string> next;
            for (const auto& s : words)
                if (static_cast<int>(s.size()) == len - 1) {
                    next.push_back(s + "x");
                    next.push_back(s + "y");
                }
            words.insert(words.end(), next.begin(), next.end());
        }
        for (const auto& s : words) {
            ++count;
            const XSeries series(XYPoly(XYWord(s)), order);
            if (!(tau(tau(series)) == series)) ++bad;
        }
        return absolute(static_cast<double>(bad), 0.0, 0.0, std::to_string(count) + " words");
    });
}

// ---------------------------------------------------------------- kernel

void suite_kernel(const SuiteEnv& env, Report& rep) {
    const std::array<cdouble, 10> alphas{cdouble(0, kPi), {1.0, 1.0}, {0.0, 0.6 * kPi}, {-0.5, 0.3},
                                         {0.25, 5.9},     {1.5, 2.5}, {-1.2, 4.0},      {0.7, 0.9},
                                         {0.0, 6.0},      {2.0, 3.3}};
    QuadConfig q = env.cfg.quad();
    q.rel_tol = std::min(q.rel_tol, 1e-12);
    for (cdouble a : alphas)
        run_check(rep, "kernel alpha=" + fmt(a), "line integral of e^{a t}/(e^{2 pi i t} - 1) equals 1/(e^a - 1)", [&] {
            const double decay = std::min(a.imag(), 2.0 * kPi - a.imag());
            const EvalResult r = integrate_line([&](cdouble t) { return std::exp(a * t) * contour_measure(t); }, 0.3,
                                                decay, q);
            return relative(r.value, 1.0 / (std::exp(a) - 1.0), kExactOracleTol);
        });
}

// ---------------------------------------------------------------- omega-MZV relations

void suite_duality(const SuiteEnv& env, Report& rep) {
    MzvEvaluator z(OmegaParam(env.cfg.omega), env.cfg.quad(), env.cache);
    for (const AMonomial& m : admissible_monomials_up_to(env.cfg.max_weight))
        run_check(rep, "duality " + m.str(), "Z_omega(sigma(w)) = Z_omega(w)", [&] {
            const EvalResult lhs = z.combination(sigma(single(m)));
            const EvalResult rhs = z.monomial(m);
            return relation(lhs, rhs.value, rhs.err_estimate);
        });
}

enum class Product { shuffle, harmonic, both };

void product_suite(const SuiteEnv& env, Report& rep, Product kind) {
    MzvEvaluator z(OmegaParam(env.cfg.omega), env.cfg.quad(), env.cache);
    const int total = env.cfg.max_weight + 1;
    const auto monomials = admissible_monomials_up_to(total - 1);
    const char* prefix = kind == Product::shuffle ? "shuffle " : kind == Product::harmonic ? "harmonic " : "double-shuffle ";
    const char* anchor = kind == Product::shuffle    ? "Z_omega(u sh v) = Z_omega(u) Z_omega(v)"
                         : kind == Product::harmonic ? "Z_omega(u * v) = Z_omega(u) Z_omega(v)"
                                                     : "Z_omega(u sh v - u * v) = 0";
    for (std::size_t i = 0; i < monomials.size(); ++i)
        for (std::size_t j = i; j < monomials.size(); ++j) {
            if (monomials[i].weight() + monomials[j].weight() > total) continue;
            const AComb u = single(monomials[i]), v = single(monomials[j]);
            run_check(rep, prefix + monomials[i].str() + " | " + monomials[j].str(), anchor, [&] {
                if (kind == Product::both) {
                    const EvalResult d = z.combination(shuffle(u, v) - harmonic(u, v));
                    return relation(d, 0.0, 0.0);
                }
                const EvalResult lhs = z.combination(kind == Product::shuffle ? shuffle(u, v) : harmonic(u, v));
                const EvalResult a = z.monomial(monomials[i]), b = z.monomial(monomials[j]);
                return relation(lhs, a.value * b.value, product_err(a, b));
            });
        }
}

void suite_shuffle(const SuiteEnv& env, Report& rep) { product_suite(env, rep, Product::shuffle); }
void suite_harmonic(const SuiteEnv& env, Report& rep) { product_suite(env, rep, Product::harmonic); }
void suite_double_shuffle(const SuiteEnv& env, Report& rep) { product_suite(env, rep, Product::both); }

void suite_reduced(const SuiteEnv& env, Report& rep) {
    MzvEvaluator reduced(OmegaParam(env.cfg.omega), env.cfg.quad(), env.cache, ZPath::reduced);
    MzvEvaluator direct(OmegaParam(env.cfg.omega), env.cfg.quad(), env.cache, ZPath::direct);
    for (int r = 1; r <= 2; ++r) {
        const int count = r == 1 ? 9 : 81;
        for (int code = 0; code < count; ++code) {
            std::vector<Block> blocks;
            for (int a = 0, c = code; a < r; ++a, c /= 9) blocks.push_back({c % 3, (c / 3) % 3});
            const AMonomial m = AMonomial::from_blocks(blocks);
            run_check(rep, "reduced " + m.str(), "reduced integral equals the direct integral", [&] {
                const EvalResult a = reduced.monomial(m), b = direct.monomial(m);
                return absolute(a.value, b.value, a.err_estimate + b.err_estimate);
            });
        }
    }
}

// ---------------------------------------------------------------- q-series oracle

void suite_qseries(const SuiteEnv& env, Report& rep) {
    const QParam qp(kQ, kQTruncation);
    const int w = env.cfg.max_weight;
    const auto monomials = admissible_monomials_up_to(w);
    for (const AMonomial& m : monomials)
        run_check(rep, "q duality " + m.str(), "Z_q(sigma(w)) = Z_q(w)", [&] {
            return absolute(Z_q(sigma(single(m)), qp).value, Z_q(m, qp).value, kExactOracleTol);
        });
    for (std::size_t i = 0; i < monomials.size(); ++i)
        for (std::size_t j = i; j < monomials.size(); ++j) {
            if (monomials[i].weight() + monomials[j].weight() > w) continue;
            const AComb u = single(monomials[i]), v = single(monomials[j]);
            const std::string pair = monomials[i].str() + " | " + monomials[j].str();
            const double prod = Z_q(monomials[i], qp).value * Z_q(monomials[j], qp).value;
            run_check(rep, "q shuffle " + pair, "Z_q(u sh v) = Z_q(u) Z_q(v)",
                      [&] { return absolute(Z_q(shuffle(u, v), qp).value, prod, kExactOracleTol); });
            run_check(rep, "q harmonic " + pair, "Z_q(u * v) = Z_q(u) Z_q(v)",
                      [&] { return absolute(Z_q(harmonic(u, v), qp).value, prod, kExactOracleTol); });
        }
}

// ---------------------------------------------------------------- limits and omega = 1

void suite_limit(const SuiteEnv& env, Report& rep) {
    const std::array<double, 4> omegas{0.2, 0.1, 0.05, 0.02};
    const double zeta2 = kPi * kPi / 6.0;
    std::vector<EvalResult> z2, hg1;
    for (double w : omegas) {
        const OmegaParam p(w);
        MzvEvaluator z(p, env.cfg.quad(), env.cache);
        z2.push_back(z.zeta(Index{2}));
        hg1.push_back(z.combination(AComb(AMonomial({ALetter::g(1)}), HbarLaurent::hbar_power(1))));
    }
    for (std::size_t j = 1; j < omegas.size(); ++j) {
        const std::string tag = "omega " + fmt(omegas[j - 1]) + " -> " + fmt(omegas[j]);
        run_check(rep, "limit zeta(2) " + tag, "|zeta_omega(2) - zeta(2)| decreases as omega -> 0", [&] {
            const double prev = std::abs(z2[j - 1].value - zeta2), cur = std::abs(z2[j].value - zeta2);
            const double margin = z2[j - 1].err_estimate + z2[j].err_estimate;
            return Outcome{cur, prev, cur - prev + margin, 0.0, cur + margin < prev, "gap at omega " + fmt(omegas[j]) + ": " + fmt(cur)};
        });
        run_check(rep, "limit h g1 " + tag, "|Z_omega(h g1)| decreases as omega -> 0", [&] {
            const double prev = std::abs(hg1[j - 1].value), cur = std::abs(hg1[j].value);
            const double margin = hg1[j - 1].err_estimate + hg1[j].err_estimate;
            return Outcome{cur, prev, cur - prev + margin, 0.0, cur + margin < prev, "value at omega " + fmt(omegas[j]) + ": " + fmt(cur)};
        });
    }
}

void suite_rationality(const SuiteEnv& env, Report& rep) {
    MzvEvaluator z(OmegaParam(1.0), env.cfg.quad(), env.cache);
    const std::array<Block, 5> blocks{{{0, 1}, {0, 0}, {1, 0}, {1, 1}, {0, 2}}};
    for (const Block& b : blocks) {
        const AMonomial m = AMonomial::from_blocks(std::span<const Block>(&b, 1));
        run_check(rep, "rationality " + m.str(), "omega = 1 value equals the generating-function coefficient", [&] {
            return absolute(z.monomial(m).value, r1_coefficient(b.alpha, b.beta), kRationalityTol);
        });
    }
}

// ---------------------------------------------------------------- hyperbolic gamma

// Worst relative deviation |e^{lhs - rhs} - 1| over a set of log-scale pairs.
struct Worst {
    double residual = -1.0;
    cdouble lhs, rhs, z;
    void take(cdouble l, cdouble r, cdouble at) {
        // Logarithms may differ by multiples of 2 pi i.
        const double res = std::abs(std::exp(l - r) - 1.0);
        if (res > residual || std::isnan(res)) {
            residual = res;
            lhs = l;
            rhs = r;
            z = at;
        }
    }
    Outcome outcome(double tol) const {
        return {lhs, rhs, residual, tol, residual <= tol, "worst at z = " + fmt(z) + "; lhs, rhs are logarithms"};
    }
};

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out;
    for (int j = 0; j < n; ++j) out.push_back(a + (b - a) * j / (n - 1));
    return out;
}

void suite_gamma(const SuiteEnv& env, Report& rep) {
    const GammaContext ctx{OmegaParam(env.cfg.omega)};
    const double omega = ctx.omega(), wb = ctx.omega_bar();
    const double edge = wb - ctx.strip_margin() - 1e-3;
    const std::array<double, 5> xs{-1.3, -0.7, -0.2, 0.35, 0.9};

    run_check(rep, "gamma reflection 5x5", "G(z) G(-z) = 1", [&] {
        Worst w;
        for (double x : xs)
            for (double y : linspace(-0.8 * edge, 0.8 * edge, 5)) {
                const cdouble z(x, y);
                w.take(ctx.log_G_strip(z) + ctx.log_G_strip(-z), 0.0, z);
            }
        return w.outcome(kGammaTol);
    });

    // Both sides from the strip integral, so the shift is not used to compute either.
    const std::array<std::tuple<std::string, double, double>, 2> shifts{
        {{"i", 1.0, omega}, {"i/omega", 1.0 / omega, 1.0}}};
    for (const auto& [label, step, rate] : shifts)
        run_check(rep, "gamma shift by " + label + " 5x5",
                  "G(z + i s) = -2i sinh(pi r (z + i omega_bar)) G(z)", [&] {
                      Worst w;
                      for (double x : xs)
                          for (double y : linspace(-edge, edge - step, 5)) {
                              const cdouble z(x, y);
                              w.take(ctx.log_G_strip(z + kI * step),
                                     ctx.log_G_strip(z) + log_m2i_sinh(kPi * rate * (z + kI * wb)), z);
                          }
                      return w.outcome(kGammaTol);
                  });

    for (double x : {8.0, -8.0})
        run_check(rep, "gamma asymptotic x=" + fmt(x), "log G(z) -> -+(pi i omega z^2/2 + pi i (omega + 1/omega)/24)", [&] {
            const cdouble z(x, 0.1 * wb);
            const cdouble lhs = ctx.log_G_strip(z), rhs = ctx.log_G_asymptotic(z);
            return Outcome{lhs, rhs, std::abs(std::exp(lhs - rhs) - 1.0), kAsymptoticTol,
                           std::abs(std::exp(lhs - rhs) - 1.0) <= kAsymptoticTol, "lhs, rhs are logarithms"};
        });

    run_check(rep, "gamma continuation at seeded points", "shift-based G agrees with the strip integral", [&] {
        std::mt19937_64 rng(env.cfg.seed);
        std::uniform_real_distribution<double> re(-2.0, 2.0), im(-0.9 * edge, 0.9 * edge);
        Worst w;
        for (int j = 0; j < 8; ++j) {
            const cdouble z(re(rng), im(rng));
            w.take(ctx.log_G(z), ctx.log_G_strip(z), z);
        }
        return w.outcome(kGammaTol);
    });
}

// ---------------------------------------------------------------- connected integrals

void suite_saalschutz(const SuiteEnv& env, Report& rep) {
    const GammaContext ctx{OmegaParam(env.cfg.omega)};
    const QuadConfig q = env.cfg.quad();
    int n = 0;
    for (const auto& u : saalschutz_presets(ctx.param())) {
        ++n;
        run_check(rep, "saalschutz preset " + std::to_string(n), "Saalschutz summation for the hyperbolic gamma function", [&] {
            std::string expr = "saalschutz:";
            for (cdouble x : u) expr += key_text(x) + ";";
            double pole_distance = 0.0;
            const RelationCheck r = cached_relation(env, expr, ctx.omega(), [&] {
                const SaalschutzResult s = saalschutz_check(u[0], u[1], u[2], u[3], ctx, q);
                pole_distance = s.min_pole_distance;
                return RelationCheck{s.lhs.value, s.rhs, s.lhs.err_estimate};
            });
            std::string note = "quadrature error " + fmt(r.err_estimate);
            if (pole_distance > 0.0) note += ", min pole distance " + fmt(pole_distance);
            return relative(r.lhs, r.rhs, kSaalschutzTol, note);
        });
    }
}

void suite_ohno(const SuiteEnv& env, Report& rep) {
    const OmegaParam p(env.cfg.omega);
    const GammaContext ctx{p};
    const QuadConfig q = env.cfg.quad();
    MzvEvaluator z(p, q, env.cache);

    const auto points = generic_points(env.cfg.seed, 3, 1e-3, 4e-3);
    for (const Index& k : {Index{1}, Index{2}})
        for (std::size_t j = 0; j < points.size(); ++j) {
            const auto [lam, mu] = points[j];
            run_check(rep, "initial relation k=(" + k.str() + ") point " + std::to_string(j + 1),
                      "I(k, {1}) = d(lam, mu) O(k raised)", [&] {
                          const OhnoParams op{lam, mu, env.cfg.order, env.cfg.eps};
                          const RelationCheck r = cached_relation(
                              env, "initial:" + k.str() + "|" + key_text(lam) + "|" + key_text(mu), p.omega(),
                              [&] { return initial_relation(k, op, ctx, q); });
                          return relative(r.lhs, r.rhs, kInitialTol,
                                          "lam = " + fmt(lam) + ", mu = " + fmt(mu) + ", error " + fmt(r.err_estimate));
                      });
        }

    const std::array<std::pair<Index, int>, 2> instances{{{Index{3}, 1}, {Index{2}, 2}}};
    for (const auto& [k, m] : instances)
        run_check(rep, "ohno sum m=" + std::to_string(m) + " k=(" + k.str() + ")", "O_m(k) = O_m(k dagger)", [&] {
            const Index d = dual_index(k);
            const EvalResult a = double_ohno_sum(k, m, 0, z), b = double_ohno_sum(d, m, 0, z);
            return absolute(a.value, b.value, kOhnoInstanceTol, "dual (" + d.str() + ")");
        });

    run_check(rep, "zeta(4) = zeta(1,3) + zeta(2,2)", "Ohno relation at weight 4", [&] {
        const EvalResult a = z.zeta(Index{4});
        const EvalResult b = z.zeta(Index{1, 3}), c = z.zeta(Index{2, 2});
        return absolute(a.value, b.value + c.value, kOhnoInstanceTol);
    });

    // Truncation of the series grows like |lam|^{order+1}.
    const auto [lam, mu] = generic_points(env.cfg.seed + 1, 1, 5e-4, 1.5e-3).front();
    run_check(rep, "ohno generating k=(2)", "Ohno generating integral equals its double series", [&] {
        const OhnoParams op{lam, mu, env.cfg.order, env.cfg.eps};
        const Index k{2};
        const EvalResult integral = cached(env, "ohno:" + k.str() + "|" + key_text(lam) + "|" + key_text(mu),
                                           p.omega(), [&] { return ohno_generating(k, op, p, q); });
        const EvalResult series = ohno_series(k, op, z);
        return absolute(integral.value, series.value, integral.err_estimate + series.err_estimate,
                        "lam = " + fmt(lam) + ", mu = " + fmt(mu) + ", series error " + fmt(series.err_estimate));
    });
}

void suite_transport(const SuiteEnv& env, Report& rep) {
    const OmegaParam p(env.cfg.omega);
    const GammaContext ctx{p};
    const QuadConfig q = env.cfg.quad();
    const auto [lam, mu] = generic_points(env.cfg.seed + 2, 1, 1e-3, 4e-3).front();
    const OhnoParams op{lam, mu, env.cfg.order, env.cfg.eps};
    const std::string where = "|" + key_text(lam) + "|" + key_text(mu);
    for (const Index& k : {Index{1}, Index{2}})
        for (const Index& l : {Index{1}, Index{2}}) {
            const std::string tag = "k=(" + k.str() + ") l=(" + l.str() + ")";
            run_check(rep, "transport first " + tag, "I(k->, l) = I(k, l^) + Lam M I(k->^, l^)", [&] {
                const RelationCheck r = cached_relation(env, "transport1:" + k.str() + ";" + l.str() + where, p.omega(),
                                                        [&] { return transport_first(k, l, op, ctx, q); });
                return absolute(r.lhs, r.rhs, kTransportTol, "error " + fmt(r.err_estimate));
            });
            run_check(rep, "transport second " + tag, "I(k^, l) = I(k, l->) - Lam M I(k^, l->^)", [&] {
                const RelationCheck r = cached_relation(env, "transport2:" + k.str() + ";" + l.str() + where, p.omega(),
                                                        [&] { return transport_second(k, l, op, ctx, q); });
                return absolute(r.lhs, r.rhs, kTransportTol, "error " + fmt(r.err_estimate));
            });
        }
}

void suite_extended_do(const SuiteEnv& env, Report& rep) {
    MzvEvaluator z(OmegaParam(env.cfg.omega), env.cfg.quad(), env.cache);
    const int order = env.cfg.order;
    const int series_order = std::max(order, 1);
    const XSeries y = XSeries::y(series_order), x = XSeries::x(series_order);
    const std::array<std::pair<std::string, XSeries>, 3> middles{
        {{"1", XSeries::one(series_order)}, {"x", x}, {"y", y}}};
    for (const auto& [name, w] : middles) {
        const OhnoTable lhs = omega_Omega(y * w * x, order, z);
        const OhnoTable rhs = omega_Omega(y * tau(w) * x, order, z);
        for (int m = 0; m <= order; ++m)
            for (int n = 0; m + n <= order; ++n)
                run_check(rep, "extended double ohno w=" + name + " (" + std::to_string(m) + "," + std::to_string(n) + ")",
                          "Omega(y w x) = Omega(y tau(w) x) coefficientwise", [&] {
                              return absolute(lhs.at(m, n), rhs.at(m, n), kExtendedTol,
                                              "error " + fmt(lhs.err(m, n) + rhs.err(m, n)));
                          });
    }
}

using SuiteFn = void (*)(const SuiteEnv&, Report&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"algebra", suite_algebra},       {"kernel", suite_kernel},
        {"duality", suite_duality},       {"shuffle", suite_shuffle},
        {"harmonic", suite_harmonic},     {"double-shuffle", suite_double_shuffle},
        {"reduced", suite_reduced},       {"qseries", suite_qseries},
        {"limit", suite_limit},           {"rationality", suite_rationality},
        {"gamma", suite_gamma},           {"saalschutz", suite_saalschutz},
        {"ohno", suite_ohno},             {"transport", suite_transport},
        {"extended-do", suite_extended_do}};
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    const auto& names = suite_names();
    return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

void run_suite(const std::string& name, const SuiteEnv& env, Report& report) {
    if (!is_suite(name)) throw ParseError("unknown suite '" + name + "'");
    for (const auto& [suite, fn] : registry())
        if (name == "all" || name == suite) fn(env, report);
}

}  // namespace omzv::cli
