#include "omzv/reference_series.hpp"

#include "omzv/errors.hpp"

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <vector>

namespace omzv {

QParam::QParam(double q, int truncation) : q_(q), n_(truncation) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q must satisfy 0 < q < 1");
    if (truncation < 1) throw DomainError("truncation must be positive");
}

double q_integer(int m, double q) { return -std::expm1(m * std::log(q)) / (1.0 - q); }

double F_q(const ALetter& letter, int m, const QParam& p) {
    if (m < 1) throw DomainError("summation index must be positive");
    if (letter.is_e1g1()) return p.hbar();
    return std::pow(std::pow(p.q(), m) / q_integer(m, p.q()), letter.k());
}

SeriesValue Z_q(const AMonomial& m, const QParam& p) {
    if (!m.admissible()) throw DomainError("monomial " + m.str() + " is not admissible");
    if (m.empty()) return {1.0, 0.0};
    const int n = p.truncation();
    // prefix[j] = sum over chains ending at some m' <= j.
    std::vector<double> prefix(static_cast<std::size_t>(n) + 1, 1.0);
    prefix[0] = 1.0;
    for (const ALetter& letter : m.letters()) {
        std::vector<double> next(static_cast<std::size_t>(n) + 1, 0.0);
        for (int j = 1; j <= n; ++j)
            next[static_cast<std::size_t>(j)] = next[static_cast<std::size_t>(j) - 1] +
                                                 F_q(letter, j, p) * prefix[static_cast<std::size_t>(j) - 1];
        prefix = std::move(next);
    }
    // Every factor is at most 1 and the last one at most q^m.
    const int r = static_cast<int>(m.size());
    double tail = 0.0;
    for (int j = n + 1;; ++j) {
        const double term = boost::math::binomial_coefficient<double>(static_cast<unsigned>(j - 1), static_cast<unsigned>(r - 1)) *
                            std::pow(p.q(), j);
        tail += term;
        if (term < 1e-18 * std::max(1.0, tail) && j > n + r) break;
        if (j > n + 100000) break;
    }
    return {prefix[static_cast<std::size_t>(n)], tail};
}

SeriesValue Z_q(const AComb& c, const QParam& p) {
    if (!in_admissible_span(c))
        throw DomainError("'" + to_string(c) + "' is outside the span of admissible monomials over Q[h]");
    SeriesValue total;
    for (const auto& [m, coeff] : c) {
        const double factor = coeff.evaluate(p.hbar());
        SeriesValue v = Z_q(m, p);
        total.value += factor * v.value;
        total.tail += std::abs(factor) * v.tail;
    }
    return total;
}

SeriesValue Z_q(const HPoly& w, const QParam& p) {
    if (!in_admissible_span(w))
        throw DomainError("'" + to_string(w) + "' is outside the span of admissible monomials over Q[h]");
    return Z_q(to_a_basis(w), p);
}

SeriesValue zeta_q(const Index& k, const QParam& p) {
    if (!k.admissible()) throw DomainError("index (" + k.str() + ") is not admissible");
    return Z_q(to_a_basis(index_to_e_word(k)), p);
}

SeriesValue mzv(const Index& k, int truncation) {
    if (!k.admissible()) throw DomainError("index (" + k.str() + ") is not admissible");
    if (truncation < 1) throw DomainError("truncation must be positive");
    const int n = truncation;
    std::vector<double> prefix(static_cast<std::size_t>(n) + 1, 1.0);
    for (int part : k.parts) {
        std::vector<double> next(static_cast<std::size_t>(n) + 1, 0.0);
        for (int j = 1; j <= n; ++j)
            next[static_cast<std::size_t>(j)] = next[static_cast<std::size_t>(j) - 1] +
                                                 std::pow(static_cast<double>(j), -part) * prefix[static_cast<std::size_t>(j) - 1];
        prefix = std::move(next);
    }
    // An inner part k_i >= 2 contributes at most zeta(k_i); the s inner parts
    // equal to 1 contribute at most (1 + log m)^s / s!. The remaining terms are
    // then bounded by C int_N^inf (1 + log x)^s x^{-k_r} dx
    // = C e^c Gamma(s + 1, c a) / c^{s + 1} with c = k_r - 1 and a = 1 + log N.
    double constant = 1.0;
    int ones = 0;
    for (std::size_t i = 0; i + 1 < k.parts.size(); ++i) {
        if (k.parts[i] == 1) ++ones;
        else constant *= boost::math::zeta(static_cast<double>(k.parts[i]));
    }
    constant /= boost::math::factorial<double>(static_cast<unsigned>(ones));
    const double c = k.parts.back() - 1.0;
    const double a = 1.0 + std::log(static_cast<double>(n));
    const double tail =
        constant * std::exp(c) * boost::math::tgamma(static_cast<double>(ones + 1), c * a) / std::pow(c, ones + 1);
    return {prefix[static_cast<std::size_t>(n)], tail};
}

}  // namespace omzv
