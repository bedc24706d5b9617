#include "oracle_values.hpp"

#include "omzv/errors.hpp"
#include "omzv/reference_series.hpp"

#include <doctest.h>

#include <array>
#include <cmath>

using namespace omzv;

namespace {

const QParam kHalf(0.5, 400);

double Zq(const char* monomial) { return Z_q(parse_amonomial(monomial), kHalf).value; }

}  // namespace

TEST_CASE("q-integers") {
    CHECK(q_integer(1, 0.5) == doctest::Approx(1.0));
    CHECK(q_integer(3, 0.5) == doctest::Approx(1.75));
    CHECK(F_q(ALetter::e1g1(), 7, kHalf) == doctest::Approx(0.5));
    CHECK(F_q(ALetter::g(2), 2, kHalf) == doctest::Approx(std::pow(0.25 / 1.5, 2)));
}

TEST_CASE("monomial values match the mpmath oracle") {
    CHECK(Zq("G1") == doctest::Approx(oracle::kQ_G1).epsilon(1e-14));
    CHECK(Zq("G2") == doctest::Approx(oracle::kQ_G2).epsilon(1e-14));
    CHECK(Zq("E G1") == doctest::Approx(oracle::kQ_EG1).epsilon(1e-14));
    CHECK(Zq("G1 G1") == doctest::Approx(oracle::kQ_G1G1).epsilon(1e-14));
    CHECK(Zq("E G2") == doctest::Approx(oracle::kQ_EG2).epsilon(1e-13));
    CHECK(zeta_q(Index{2}, kHalf).value == doctest::Approx(oracle::kQ_Zeta2).epsilon(1e-14));
}

TEST_CASE("tail bound is tiny at q = 1/2") {
    const SeriesValue v = Z_q(parse_amonomial("G1 G1 G2"), kHalf);
    CHECK(v.tail < 1e-100);
    const SeriesValue coarse = Z_q(parse_amonomial("G1 G1 G2"), QParam(0.9, 50));
    const SeriesValue fine = Z_q(parse_amonomial("G1 G1 G2"), QParam(0.9, 2000));
    CHECK(std::abs(fine.value - coarse.value) <= coarse.tail);
}

TEST_CASE("products and duality hold exactly in the q-model") {
    const auto ms = admissible_monomials_up_to(3);
    for (const AMonomial& u : ms) {
        CHECK(Z_q(sigma(AComb(u)), kHalf).value == doctest::Approx(Z_q(u, kHalf).value).epsilon(1e-12));
        for (const AMonomial& v : ms) {
            if (u.weight() + v.weight() > 4) continue;
            const double prod = Z_q(u, kHalf).value * Z_q(v, kHalf).value;
            CHECK(Z_q(shuffle(AComb(u), AComb(v)), kHalf).value == doctest::Approx(prod).epsilon(1e-12));
            CHECK(Z_q(harmonic(AComb(u), AComb(v)), kHalf).value == doctest::Approx(prod).epsilon(1e-12));
        }
    }
}

TEST_CASE("classical values within the tail bound") {
    const std::array<std::pair<Index, double>, 5> cases{{{Index{2}, oracle::kZeta2},
                                                         {Index{3}, oracle::kZeta3},
                                                         {Index{1, 3}, oracle::kZeta13},
                                                         {Index{2, 2}, oracle::kZeta22},
                                                         {Index{4}, oracle::kZeta4}}};
    for (const auto& [k, expected] : cases) {
        CAPTURE(k.str());
        const SeriesValue v = mzv(k);
        CHECK(std::abs(v.value - expected) <= v.tail);
        CHECK(v.tail < 1e-3);
    }
}

TEST_CASE("invalid input") {
    CHECK_THROWS_AS(QParam(1.0), DomainError);
    CHECK_THROWS_AS(QParam(0.5, 0), DomainError);
    CHECK_THROWS_AS(zeta_q(Index{2, 1}, kHalf), DomainError);
    CHECK_THROWS_AS(mzv(Index{1}), DomainError);
    CHECK_THROWS_AS(Z_q(parse_hpoly("b"), kHalf), DomainError);
}
