#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <string_view>

namespace omzv {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Element of Q[h, 1/h]; zero coefficients are never stored.
class HbarLaurent {
public:
    HbarLaurent() = default;
    HbarLaurent(long constant);  // NOLINT(google-explicit-constructor)
    HbarLaurent(const Rational& constant);  // NOLINT(google-explicit-constructor)

    static HbarLaurent hbar_power(int exponent, const Rational& coefficient = Rational(1));

    const std::map<int, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Rational coefficient(int exponent) const;
    int min_degree() const;
    int max_degree() const;

    HbarLaurent& operator+=(const HbarLaurent& other);
    HbarLaurent& operator-=(const HbarLaurent& other);
    HbarLaurent& operator*=(const HbarLaurent& other);
    HbarLaurent operator-() const;

    friend HbarLaurent operator+(HbarLaurent lhs, const HbarLaurent& rhs) { return lhs += rhs; }
    friend HbarLaurent operator-(HbarLaurent lhs, const HbarLaurent& rhs) { return lhs -= rhs; }
    friend HbarLaurent operator*(HbarLaurent lhs, const HbarLaurent& rhs) { return lhs *= rhs; }
    friend bool operator==(const HbarLaurent& lhs, const HbarLaurent& rhs) { return lhs.terms_ == rhs.terms_; }

    std::complex<double> evaluate(std::complex<double> hbar) const;
    double evaluate(double hbar) const;

    // "3/2*h^-1 + 1 - h^2"; "0" for the zero element.
    std::string str() const;

private:
    void add_term(int exponent, const Rational& coefficient);

    std::map<int, Rational> terms_;
};

inline bool coefficient_is_zero(const HbarLaurent& c) { return c.is_zero(); }
inline bool coefficient_is_zero(const Rational& c) { return sgn(c) == 0; }

}  // namespace omzv
