#include "oracle_values.hpp"

#include "omzv/errors.hpp"
#include "omzv/ohno_connector.hpp"

#include <doctest.h>

#include <cmath>

using namespace omzv;

namespace {

QuadConfig config(double tol = 1e-8) {
    QuadConfig cfg;
    cfg.rel_tol = tol;
    return cfg;
}

const cdouble kLam(0.0021, 0.0013), kMu(-0.0017, 0.0024);

}  // namespace

TEST_CASE("compositions") {
    const auto c = compositions(2, 2);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == std::vector<int>{0, 2});
    CHECK(c[1] == std::vector<int>{1, 1});
    CHECK(c[2] == std::vector<int>{2, 0});
    CHECK(compositions(3, 3).size() == 10);
    CHECK(compositions(0, 2).size() == 1);
}

TEST_CASE("ohno tables") {
    OhnoTable t(2);
    t.set(0, 0, 1.0);
    t.set(1, 0, 2.0, 0.1);
    t.add(1, 0, 1.0, 0.1);
    t.set(0, 2, cdouble(0.0, 1.0));
    CHECK(t.at(1, 0) == cdouble(3.0));
    CHECK(t.err(1, 0) == doctest::Approx(0.2));
    CHECK(t.evaluate(0.5, 2.0) == cdouble(1.0 + 1.5, 4.0));
    CHECK_THROWS_AS(t.set(2, 1, 1.0), DomainError);
    OhnoTable u = t;
    u.set(0, 0, 1.5);
    CHECK(u.max_difference(t).first == doctest::Approx(0.5));
}

TEST_CASE("Ohno sums of dual indices agree") {
    MzvEvaluator z(OmegaParam(1.0), config(1e-10));
    const EvalResult a = double_ohno_sum(Index{3}, 1, 0, z);
    const EvalResult b = double_ohno_sum(Index{1, 2}, 1, 0, z);
    CHECK(std::abs(a.value - b.value) < 1e-6);
    const EvalResult zeta4 = z.zeta(Index{4});
    CHECK(std::abs(a.value - zeta4.value) < 1e-12);
}

TEST_CASE("region checks and poles") {
    const OmegaParam p(1.0);
    CHECK_THROWS_AS(check_ohno_region(0.5, 0.0, 0.3), DomainError);
    CHECK_NOTHROW(check_ohno_region(0.01, 0.01, 0.3));
    CHECK_THROWS_AS(ohno_eps(1, p, 0.9), DomainError);
    CHECK(ohno_eps(1, p, 0.0) < 0.5);
    CHECK_THROWS_AS(connected_eps(4, p, 0.5), DomainError);
    CHECK_THROWS_AS(ohno_J(2, -kLam, kLam, kMu, p), PoleError);
    CHECK_THROWS_AS(ohno_J(3, cdouble(0.0, 0.0), kLam, kMu, p), PoleError);
}

TEST_CASE("generating integral matches its series at a small point") {
    const OmegaParam p(1.0);
    const OhnoParams op{cdouble(0.0008, -0.0005), cdouble(0.0003, 0.0009), 2, 0.0};
    const EvalResult integral = ohno_generating(Index{2}, op, p, config(1e-10));
    MzvEvaluator z(p, config(1e-10));
    const EvalResult series = ohno_series(Index{2}, op, z);
    CHECK(std::abs(integral.value - series.value) <= integral.err_estimate + series.err_estimate);
}

TEST_CASE("Saalschutz presets reproduce the mpmath closed form") {
    const GammaContext ctx{OmegaParam(1.0)};
    const auto presets = saalschutz_presets(ctx.param());
    REQUIRE(presets.size() == oracle::kSaalschutzRhs.size());
    for (std::size_t j = 0; j < presets.size(); ++j) {
        CAPTURE(j);
        const auto& u = presets[j];
        const SaalschutzResult r = saalschutz_check(u[0], u[1], u[2], u[3], ctx, config());
        CHECK(std::abs(r.rhs - oracle::kSaalschutzRhs[j]) < 1e-13);
        CHECK(std::abs(r.lhs.value - r.rhs) / std::abs(r.rhs) < 1e-8);
        CHECK(r.min_pole_distance > 0.1);
    }
}

TEST_CASE("Saalschutz rejects a line that does not separate the poles") {
    const GammaContext ctx{OmegaParam(1.0)};
    const cdouble low(0.1, 0.1);
    CHECK_THROWS_AS(saalschutz_check(low, low, low, low, ctx, config()), DomainError);
}

TEST_CASE("connected integral is stable under the window") {
    const GammaContext ctx{OmegaParam(1.0)};
    const OhnoParams op{kLam, kMu, 2, 0.0};
    const EvalResult a = connected_integral(Index{1}, Index{1}, op, ctx, config());
    QuadConfig wide = config();
    wide.half_width = 20.0;
    const EvalResult b = connected_integral(Index{1}, Index{1}, op, ctx, wide);
    CHECK(std::abs(a.value - b.value) <= a.err_estimate + b.err_estimate);
    CHECK(a.err_estimate < 1e-6);
}

TEST_CASE("initial and transport relations") {
    const GammaContext ctx{OmegaParam(1.0)};
    const OhnoParams op{kLam, kMu, 2, 0.0};
    const RelationCheck init = initial_relation(Index{1}, op, ctx, config());
    CHECK(init.relative() < 1e-6);
    const RelationCheck t1 = transport_first(Index{1}, Index{1}, op, ctx, config());
    CHECK(t1.residual() < 1e-5);
    const RelationCheck t2 = transport_second(Index{1}, Index{2}, op, ctx, config());
    CHECK(t2.residual() < 1e-5);
}

TEST_CASE("extended double Ohno for w = x") {
    MzvEvaluator z(OmegaParam(1.0), config(1e-10));
    const XSeries y = XSeries::y(2), x = XSeries::x(2);
    const OhnoTable lhs = omega_Omega(y * x * x, 2, z);
    const OhnoTable rhs = omega_Omega(y * tau(x) * x, 2, z);
    const auto [diff, err] = lhs.max_difference(rhs);
    CHECK(diff < 1e-5);
    CHECK(diff <= 5.0 * err + 1e-12);
}

TEST_CASE("expansion of the connected integral") {
    const GammaContext ctx{OmegaParam(1.0)};
    const ExpansionFit fit = connected_expansion(Index{1}, Index{1}, 1, ctx, config());
    CHECK(fit.condition < 1e8);
    // Z_{0,0}(k, {1}) is the Ohno value O_{0,0}(k raised) = zeta_omega(2).
    MzvEvaluator z(OmegaParam(1.0), config(1e-10));
    CHECK(std::abs(fit.table.at(0, 0) - z.zeta(Index{2}).value) < 1e-4);
}
