#include "omzv/laurent.hpp"

#include "omzv/errors.hpp"

#include <cctype>
#include <cmath>

namespace omzv {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (seen_slash) throw ParseError("malformed rational '" + s + "'");
            seen_slash = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw ParseError("malformed rational '" + s + "'");
        }
    }
    if (!digit_before || (seen_slash && !digit_after)) throw ParseError("malformed rational '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'");
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

HbarLaurent::HbarLaurent(long constant) { add_term(0, Rational(constant)); }

HbarLaurent::HbarLaurent(const Rational& constant) { add_term(0, constant); }

HbarLaurent HbarLaurent::hbar_power(int exponent, const Rational& coefficient) {
    HbarLaurent r;
    r.add_term(exponent, coefficient);
    return r;
}

bool HbarLaurent::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational HbarLaurent::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int HbarLaurent::min_degree() const {
    if (terms_.empty()) throw DomainError("degree of the zero Laurent polynomial");
    return terms_.begin()->first;
}

int HbarLaurent::max_degree() const {
    if (terms_.empty()) throw DomainError("degree of the zero Laurent polynomial");
    return terms_.rbegin()->first;
}

void HbarLaurent::add_term(int exponent, const Rational& coefficient) {
    if (sgn(coefficient) == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

HbarLaurent& HbarLaurent::operator+=(const HbarLaurent& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

HbarLaurent& HbarLaurent::operator-=(const HbarLaurent& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

HbarLaurent& HbarLaurent::operator*=(const HbarLaurent& other) {
    HbarLaurent product;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) product.add_term(e1 + e2, c1 * c2);
    terms_ = std::move(product.terms_);
    return *this;
}

HbarLaurent HbarLaurent::operator-() const {
    HbarLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

std::complex<double> HbarLaurent::evaluate(std::complex<double> hbar) const {
    std::complex<double> sum = 0.0;
    for (const auto& [e, c] : terms_) sum += c.get_d() * std::pow(hbar, e);
    return sum;
}

double HbarLaurent::evaluate(double hbar) const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_) sum += c.get_d() * std::pow(hbar, e);
    return sum;
}

std::string HbarLaurent::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        if (e == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "h";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace omzv
