#pragma once

#include "omzv/word_algebra.hpp"

namespace omzv {

class QParam {
public:
    explicit QParam(double q, int truncation = 400);

    double q() const noexcept { return q_; }
    int truncation() const noexcept { return n_; }
    // Value of h in the q-setting.
    double hbar() const noexcept { return 1.0 - q_; }

private:
    double q_;
    int n_;
};

struct SeriesValue {
    double value = 0.0;
    // Bound on the neglected part of the series.
    double tail = 0.0;
};

// q-integer [m] = (1 - q^m)/(1 - q).
double q_integer(int m, double q);
double F_q(const ALetter& letter, int m, const QParam& p);

SeriesValue Z_q(const AMonomial& m, const QParam& p);
// Throws DomainError outside the span of admissible monomials.
SeriesValue Z_q(const AComb& c, const QParam& p);
SeriesValue Z_q(const HPoly& w, const QParam& p);
SeriesValue zeta_q(const Index& k, const QParam& p);

inline constexpr int kDefaultMzvTruncation = 10000;

// Nested sum over 0 < m_1 < ... < m_r <= N with an integral tail bound.
SeriesValue mzv(const Index& k, int truncation = kDefaultMzvTruncation);

}  // namespace omzv
