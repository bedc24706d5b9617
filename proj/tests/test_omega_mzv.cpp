#include "oracle_values.hpp"

#include "omzv/errors.hpp"
#include "omzv/omega_mzv.hpp"
#include "omzv/value_cache.hpp"

#include <doctest.h>

#include <array>
#include <bit>
#include <filesystem>
#include <fstream>
#include <numbers>

using namespace omzv;

namespace {

constexpr double kPi = std::numbers::pi;

QuadConfig config(double tol = 1e-10) {
    QuadConfig cfg;
    cfg.rel_tol = tol;
    return cfg;
}

EvalResult Z(const char* monomial, double omega, ZPath path = ZPath::reduced) {
    const AMonomial m = parse_amonomial(monomial);
    return path == ZPath::reduced ? Z_omega_reduced(m, OmegaParam(omega), config())
                                  : Z_omega_monomial(m, OmegaParam(omega), config());
}

// Oracle digits limit the comparison for the 10-digit values.
void check_value(const EvalResult& r, oracle::cd expected, double digits_tol) {
    CHECK(std::abs(r.value - expected) <= std::max(digits_tol, 5.0 * r.err_estimate));
}

}  // namespace

TEST_CASE("parameters") {
    const OmegaParam p(0.5);
    CHECK(p.hbar() == cdouble(0.0, kPi));
    CHECK(p.omega_bar() == doctest::Approx(1.5));
    CHECK(p.unit_min() == doctest::Approx(1.0));
    CHECK(OmegaParam(2.0 / 1.5).unit_min() == doctest::Approx(0.75));
    CHECK_THROWS_AS(OmegaParam(0.0), DomainError);
    CHECK_THROWS_AS(OmegaParam(2.5), DomainError);
}

TEST_CASE("stable exponentials") {
    CHECK(std::abs(inv_expm1(cdouble(800.0, 1.0))) < 1e-300);
    CHECK(std::abs(inv_expm1(cdouble(-800.0, 1.0)) + 1.0) < 1e-15);
    CHECK(std::abs(expm1(cdouble(1e-12, 0.0)) - (1e-12 + 5e-25)) < 1e-36);
    CHECK_THROWS_AS(kernel_I(ALetter::g(1), cdouble(0.0, 0.0), OmegaParam(1.0)), PoleError);
}

TEST_CASE("values at omega = 1 match the mpmath oracle") {
    check_value(Z("G1", 1.0), oracle::kOmega1_G1, 1e-9);
    check_value(Z("G2", 1.0), oracle::kOmega1_G2, 1e-9);
    check_value(Z("G3", 1.0), oracle::kOmega1_G3, 1e-9);
    check_value(Z("E G1", 1.0), oracle::kOmega1_EG1, 1e-9);
    check_value(Z("E G2", 1.0), oracle::kOmega1_EG2, 2e-9);
}

TEST_CASE("values away from omega = 1 match the mpmath oracle") {
    check_value(Z("G2", 0.3), oracle::kOmega03_G2, 1e-9);
    check_value(Z("G1", 0.3), oracle::kOmega03_G1, 1e-9);
    check_value(Z("G2", 1.7), oracle::kOmega17_G2, 1e-9);
    check_value(Z("G1", 1.7), oracle::kOmega17_G1, 1e-9);
    check_value(Z("G1 G2", 0.5), oracle::kOmega05_G1G2, 2e-9);
}

TEST_CASE("direct and reduced paths agree") {
    for (const char* m : {"E G1", "E E G2", "G1 E G1", "E G2 G1"})
        for (double omega : {0.3, 1.0, 1.7}) {
            CAPTURE(m);
            CAPTURE(omega);
            const EvalResult a = Z(m, omega, ZPath::reduced), b = Z(m, omega, ZPath::direct);
            CHECK(std::abs(a.value - b.value) <= a.err_estimate + b.err_estimate);
        }
}

TEST_CASE("zeta_omega(2) from the e-word") {
    const EvalResult z = zeta_omega(Index{2}, OmegaParam(1.0), config());
    // zeta_1(2) = Z(g2) + h Z(g1) with h = 2 pi i.
    const cdouble expected = oracle::kOmega1_G2 + cdouble(0.0, 2.0 * kPi) * oracle::kOmega1_G1;
    CHECK(std::abs(z.value - expected) < 1e-8);
}

TEST_CASE("non-admissible input") {
    CHECK_THROWS_AS(zeta_omega(Index{2, 1}, OmegaParam(1.0), config()), DomainError);
    CHECK_THROWS_AS(Z("G1 E", 1.0), DomainError);
    MzvEvaluator z(OmegaParam(1.0), config());
    CHECK_THROWS_AS(z.word(parse_hpoly("b")), DomainError);
}

TEST_CASE("contour offset validation") {
    QuadConfig cfg = config();
    cfg.eps = 0.6;
    CHECK_THROWS_AS(z_eps(2, OmegaParam(1.0), cfg), DomainError);
    cfg.eps = 0.2;
    CHECK(z_eps(2, OmegaParam(1.0), cfg) == 0.2);
    CHECK(z_eps(3, OmegaParam(1.0), config()) == doctest::Approx(0.25));
}

TEST_CASE("generating-function coefficients at omega = 1") {
    for (const auto& c : oracle::kR1) {
        CAPTURE(c.alpha);
        CAPTURE(c.beta);
        CHECK(std::abs(r1_coefficient(c.alpha, c.beta) - c.value) < 1e-9);
        const Block b{c.alpha, c.beta};
        const EvalResult z = Z_omega_reduced(AMonomial::from_blocks(std::span<const Block>(&b, 1)), OmegaParam(1.0), config());
        CHECK(std::abs(z.value - c.value) < 1e-8);
    }
}

TEST_CASE("depth-two generating function by quadrature") {
    const std::array<cdouble, 2> xs{cdouble(0.11, 0.02), cdouble(-0.07, 0.05)};
    const std::array<cdouble, 2> ys{cdouble(0.12, 0.1), cdouble(0.08, -0.05)};
    const EvalResult r = r_omega_integral(xs, ys, OmegaParam(1.0), config(1e-9));
    const cdouble rec = r1_recurrence(xs, ys);
    CHECK(std::abs(r.value - rec) <= std::max(1e-7, 5.0 * r.err_estimate));
}

TEST_CASE("evaluator cache round trip is bit exact") {
    const auto path = std::filesystem::temp_directory_path() / "omzv_test_mzv_cache.jsonl";
    std::filesystem::remove(path);
    EvalResult first;
    {
        ValueCache cache(path);
        MzvEvaluator z(OmegaParam(1.0), config(), &cache);
        first = z.zeta(Index{1, 2});
        CHECK(cache.stats().entries > 0);
    }
    ValueCache cache(path);
    MzvEvaluator z(OmegaParam(1.0), config(), &cache);
    const EvalResult second = z.zeta(Index{1, 2});
    CHECK(cache.stats().misses == 0);
    CHECK(cache.stats().hits > 0);
    CHECK(std::bit_cast<std::uint64_t>(first.value.real()) == std::bit_cast<std::uint64_t>(second.value.real()));
    CHECK(std::bit_cast<std::uint64_t>(first.value.imag()) == std::bit_cast<std::uint64_t>(second.value.imag()));
    CHECK(first.err_estimate == second.err_estimate);
    std::filesystem::remove(path);
}

TEST_CASE("corrupt cache lines are dropped and rewritten") {
    const auto path = std::filesystem::temp_directory_path() / "omzv_test_corrupt.jsonl";
    {
        std::ofstream out(path, std::ios::trunc);
        out << "{not json\n";
    }
    ValueCache cache(path);
    CHECK(cache.stats().corrupt == 1);
    CHECK(cache.stats().entries == 0);
    CHECK(cache.warnings().size() == 1);
    ValueCache reread(path);
    CHECK(reread.stats().corrupt == 0);
    std::filesystem::remove(path);
}
