#include "omzv/ncseries.hpp"

#include "omzv/errors.hpp"

namespace omzv {

XYWord::XYWord(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
        if (c != 'x' && c != 'y') throw ParseError(std::string("invalid letter '") + c + "' in x/y word");
}

std::string XYWord::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += letters_[i];
    }
    return out;
}

XYWord operator+(const XYWord& lhs, const XYWord& rhs) {
    XYWord w;
    w.letters_ = lhs.letters_ + rhs.letters_;
    return w;
}

XYPoly xy_product(const XYPoly& lhs, const XYPoly& rhs) {
    XYPoly out;
    for (const auto& [w1, c1] : lhs)
        for (const auto& [w2, c2] : rhs) out.add(w1 + w2, c1 * c2);
    return out;
}

XSeries::XSeries(int order) {
    if (order < 0) throw DomainError("series order must be non-negative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

XSeries::XSeries(const XYPoly& constant, int order) : XSeries(order) { coeffs_[0] = constant; }

XSeries XSeries::one(int order) { return XSeries(XYPoly(XYWord{}), order); }
XSeries XSeries::x(int order) { return XSeries(XYPoly(XYWord("x")), order); }
XSeries XSeries::y(int order) { return XSeries(XYPoly(XYWord("y")), order); }

XSeries XSeries::X(int order) {
    XSeries s(order);
    if (order >= 1) s.coeffs_[1] = XYPoly(XYWord{});
    return s;
}

void XSeries::add(int power, const XYPoly& p) {
    if (power < 0) throw DomainError("negative power of X");
    if (power > order()) return;
    coeffs_[static_cast<std::size_t>(power)] += p;
}

void XSeries::check_order(const XSeries& other) const {
    if (order() != other.order())
        throw DomainError("truncation orders differ (" + std::to_string(order()) + " vs " +
                          std::to_string(other.order()) + ")");
}

XSeries& XSeries::operator+=(const XSeries& other) {
    check_order(other);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
    return *this;
}

XSeries& XSeries::operator-=(const XSeries& other) {
    check_order(other);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= other.coeffs_[j];
    return *this;
}

XSeries operator*(const Rational& c, const XSeries& s) {
    XSeries out = s;
    for (auto& p : out.coeffs_) p *= c;
    return out;
}

std::string XSeries::str() const {
    std::string out;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        for (const auto& [w, c] : coeffs_[j]) {
            const bool negative = sgn(c) < 0;
            Rational mag = abs(c);
            std::string piece;
            if (mag != 1) piece = mag.get_str() + (w.empty() ? "" : "*");
            if (!w.empty() || mag == 1) piece += w.str();
            if (j > 0) piece += " X^" + std::to_string(j);
            if (out.empty()) {
                out = negative ? "-" + piece : piece;
            } else {
                out += (negative ? " - " : " + ") + piece;
            }
        }
    }
    return out.empty() ? "0" : out;
}

XSeries series_mul(const XSeries& lhs, const XSeries& rhs) {
    if (lhs.order() != rhs.order())
        throw DomainError("truncation orders differ (" + std::to_string(lhs.order()) + " vs " +
                          std::to_string(rhs.order()) + ")");
    const int n = lhs.order();
    XSeries out(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) out.add(i + j, xy_product(lhs.coefficient(i), rhs.coefficient(j)));
    return out;
}

XSeries geom_inverse(const XYPoly& u, int order) {
    XSeries out(order);
    XYPoly power(XYWord{});
    for (int j = 0; j <= order; ++j) {
        out.add(j, j % 2 == 0 ? power : -power);
        power = xy_product(power, u);
    }
    return out;
}

XSeries tau(const XSeries& s) {
    const int n = s.order();
    const XYPoly yx(XYWord("yx"));
    const XSeries tau_x = series_mul(geom_inverse(yx, n), XSeries::y(n));
    XSeries one_plus = XSeries::one(n);
    one_plus.add(1, yx);
    const XSeries tau_y = series_mul(XSeries::x(n), one_plus);

    XSeries out(n);
    for (int j = 0; j <= n; ++j) {
        for (const auto& [w, c] : s.coefficient(j)) {
            XSeries image = XSeries::one(n);
            for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
                image = series_mul(image, *it == 'x' ? tau_x : tau_y);
            for (int i = 0; i + j <= n; ++i) {
                XYPoly term = image.coefficient(i);
                term *= c;
                out.add(i + j, term);
            }
        }
    }
    return out;
}

Index z_decompose(const XYWord& w) {
    const std::string& s = w.letters();
    if (s.empty() || s.front() != 'y' || s.back() != 'x')
        throw DomainError("word '" + w.str() + "' is not of the form y...x");
    std::vector<int> parts;
    for (char c : s) {
        if (c == 'y') {
            parts.push_back(1);
        } else {
            ++parts.back();
        }
    }
    return Index(std::move(parts));
}

}  // namespace omzv
