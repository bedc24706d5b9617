#pragma once

#include "omzv/laurent.hpp"

#include <map>
#include <utility>

namespace omzv {

// Finite linear combination of keys with coefficients in a ring. Terms are
// kept in the key's canonical order; zero coefficients are dropped.
template <class Key, class Coeff>
class LinearCombination {
public:
    using map_type = std::map<Key, Coeff>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;
    explicit LinearCombination(const Key& key, const Coeff& coeff = Coeff(1)) { add(key, coeff); }

    void add(const Key& key, const Coeff& coeff) {
        if (coefficient_is_zero(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (coefficient_is_zero(it->second)) terms_.erase(it);
        }
    }

    Coeff coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

    LinearCombination& operator+=(const LinearCombination& other) {
        for (const auto& [k, c] : other.terms_) add(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& other) {
        for (const auto& [k, c] : other.terms_) add(k, -c);
        return *this;
    }
    LinearCombination& operator*=(const Coeff& scalar) {
        if (coefficient_is_zero(scalar)) {
            terms_.clear();
            return *this;
        }
        map_type scaled;
        for (const auto& [k, c] : terms_) {
            Coeff p = c * scalar;
            if (!coefficient_is_zero(p)) scaled.emplace(k, std::move(p));
        }
        terms_ = std::move(scaled);
        return *this;
    }
    LinearCombination operator-() const {
        LinearCombination r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(LinearCombination a, const Coeff& s) { return a *= s; }
    friend LinearCombination operator*(const Coeff& s, LinearCombination a) { return a *= s; }
    friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

private:
    map_type terms_;
};

}  // namespace omzv
