#pragma once

#include "omzv/laurent.hpp"
#include "omzv/lincomb.hpp"
#include "omzv/word_algebra.hpp"

#include <compare>
#include <string>
#include <vector>

namespace omzv {

// Word over {x, y}; ordered by length, then lexicographically.
class XYWord {
public:
    XYWord() = default;
    explicit XYWord(std::string letters);

    const std::string& letters() const noexcept { return letters_; }
    bool empty() const noexcept { return letters_.empty(); }
    std::size_t size() const noexcept { return letters_.size(); }
    std::string str() const;  // "y x x"; "1" when empty

    friend XYWord operator+(const XYWord& lhs, const XYWord& rhs);
    friend bool operator==(const XYWord&, const XYWord&) = default;
    friend std::strong_ordering operator<=>(const XYWord& lhs, const XYWord& rhs) {
        if (auto c = lhs.letters_.size() <=> rhs.letters_.size(); c != 0) return c;
        return lhs.letters_.compare(rhs.letters_) <=> 0;
    }

private:
    std::string letters_;
};

using XYPoly = LinearCombination<XYWord, Rational>;

XYPoly xy_product(const XYPoly& lhs, const XYPoly& rhs);

inline constexpr int kDefaultSeriesOrder = 4;

// Power series in a central variable X with coefficients in Q<x, y>,
// truncated after X^order.
class XSeries {
public:
    explicit XSeries(int order = kDefaultSeriesOrder);
    XSeries(const XYPoly& constant, int order);

    static XSeries one(int order = kDefaultSeriesOrder);
    static XSeries x(int order = kDefaultSeriesOrder);
    static XSeries y(int order = kDefaultSeriesOrder);
    // The formal variable X itself.
    static XSeries X(int order = kDefaultSeriesOrder);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const XYPoly& coefficient(int power) const { return coeffs_.at(static_cast<std::size_t>(power)); }
    const std::vector<XYPoly>& coefficients() const noexcept { return coeffs_; }
    void add(int power, const XYPoly& p);

    XSeries& operator+=(const XSeries& other);
    XSeries& operator-=(const XSeries& other);
    friend XSeries operator+(XSeries a, const XSeries& b) { return a += b; }
    friend XSeries operator-(XSeries a, const XSeries& b) { return a -= b; }
    friend XSeries operator*(const Rational& c, const XSeries& s);
    friend bool operator==(const XSeries&, const XSeries&) = default;

    // "y x x + 1/2*y x y x X^1"; "0" for zero.
    std::string str() const;

private:
    void check_order(const XSeries& other) const;
    std::vector<XYPoly> coeffs_;
};

XSeries series_mul(const XSeries& lhs, const XSeries& rhs);
inline XSeries operator*(const XSeries& lhs, const XSeries& rhs) { return series_mul(lhs, rhs); }

// (1 + u X)^{-1} truncated at X^order.
XSeries geom_inverse(const XYPoly& u, int order = kDefaultSeriesOrder);

// Anti-automorphism with x -> (1 + yxX)^{-1} y, y -> x (1 + yxX), X -> X.
XSeries tau(const XSeries& s);

// Index k with z_k = w, where z_k = y x^{k-1}. Throws DomainError unless w
// starts with y and ends with x.
Index z_decompose(const XYWord& w);

}  // namespace omzv
