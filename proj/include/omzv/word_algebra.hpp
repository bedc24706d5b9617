#pragma once

#include "omzv/laurent.hpp"
#include "omzv/lincomb.hpp"

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace omzv {

// Word over {a, b}; the empty word is the unit. Ordered by length, then
// lexicographically.
class ABWord {
public:
    ABWord() = default;
    explicit ABWord(std::string letters);

    const std::string& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    char back() const { return letters_.back(); }
    ABWord without_last() const { return ABWord(letters_.substr(0, letters_.size() - 1), trusted{}); }
    ABWord appended(char letter) const;
    int count(char letter) const;

    // "b a a"; "1" for the empty word.
    std::string str() const;

    friend ABWord operator+(const ABWord& lhs, const ABWord& rhs) { return ABWord(lhs.letters_ + rhs.letters_, trusted{}); }
    friend bool operator==(const ABWord&, const ABWord&) = default;
    friend std::strong_ordering operator<=>(const ABWord& lhs, const ABWord& rhs) {
        if (auto c = lhs.letters_.size() <=> rhs.letters_.size(); c != 0) return c;
        return lhs.letters_.compare(rhs.letters_) <=> 0;
    }

private:
    struct trusted {};
    ABWord(std::string letters, trusted) : letters_(std::move(letters)) {}
    std::string letters_;
};

using HPoly = LinearCombination<ABWord, HbarLaurent>;

// Letter of the free alphabet: E stands for e1 - g1 = h b, G(k) for g_k = b a^k.
class ALetter {
public:
    static ALetter e1g1() { return ALetter(0); }
    static ALetter g(int k);

    bool is_e1g1() const noexcept { return k_ == 0; }
    int k() const noexcept { return k_; }
    int weight() const noexcept { return k_ == 0 ? 1 : k_; }
    std::string str() const;

    friend bool operator==(const ALetter&, const ALetter&) = default;
    friend auto operator<=>(const ALetter&, const ALetter&) = default;

private:
    explicit ALetter(int k) : k_(k) {}
    int k_;
};

// Exponents of one factor (e1-g1)^alpha g_{beta+1} in the canonical form of
// an admissible monomial.
struct Block {
    int alpha = 0;
    int beta = 0;
    friend bool operator==(const Block&, const Block&) = default;
};

class AMonomial {
public:
    AMonomial() = default;
    explicit AMonomial(std::vector<ALetter> letters) : letters_(std::move(letters)) {}

    static AMonomial from_blocks(std::span<const Block> blocks);

    const std::vector<ALetter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    int weight() const noexcept;
    int g_count() const noexcept;
    // Empty, or last letter is not E.
    bool admissible() const noexcept;
    // Canonical block form; throws DomainError unless admissible.
    std::vector<Block> blocks() const;

    AMonomial appended(const ALetter& letter) const;
    AMonomial without_last() const;

    // "E G2 G1"; "1" for the empty monomial.
    std::string str() const;

    friend AMonomial operator+(const AMonomial& lhs, const AMonomial& rhs);
    friend bool operator==(const AMonomial&, const AMonomial&) = default;
    friend std::strong_ordering operator<=>(const AMonomial& lhs, const AMonomial& rhs);

private:
    std::vector<ALetter> letters_;
};

using AComb = LinearCombination<AMonomial, HbarLaurent>;

// Tuple of positive integers.
struct Index {
    std::vector<int> parts;

    Index() = default;
    explicit Index(std::vector<int> p);
    Index(std::initializer_list<int> p) : Index(std::vector<int>(p)) {}

    int weight() const noexcept;
    int depth() const noexcept { return static_cast<int>(parts.size()); }
    bool admissible() const noexcept { return !parts.empty() && parts.back() >= 2; }
    std::string str() const;  // "1,3,2"

    // Appends a part equal to 1.
    Index extended() const;
    // Raises the last part by one.
    Index raised() const;

    friend bool operator==(const Index&, const Index&) = default;
    friend auto operator<=>(const Index&, const Index&) = default;
};

Index parse_index(std::string_view text);

// Parsing and printing. Polynomials print as "2*b a b a + h*b b a"; the
// parser accepts that format and products of rationals, h^n and
// parenthesised sums in front of a word.
HPoly parse_hpoly(std::string_view text);
std::string to_string(const HPoly& p);
AMonomial parse_amonomial(std::string_view text);
std::string to_string(const AComb& p);

// Noncommutative product; h is central.
HPoly concatenate(const HPoly& lhs, const HPoly& rhs);

HPoly expand(const AMonomial& m);
HPoly expand(const AComb& p);
// Rewrites a polynomial whose words all start with b in the free alphabet.
AComb to_a_basis(const HPoly& p);

HPoly shuffle(const HPoly& lhs, const HPoly& rhs);
AComb shuffle(const AComb& lhs, const AComb& rhs);
AComb harmonic(const AComb& lhs, const AComb& rhs);
HPoly harmonic(const HPoly& lhs, const HPoly& rhs);
HPoly sigma(const HPoly& p);
AComb sigma(const AComb& p);
HPoly satoh_residual(const HPoly& lhs, const HPoly& rhs);

// Membership in the C-span of admissible monomials (h-degrees >= 0).
bool in_admissible_span(const HPoly& p);
bool in_admissible_span(const AComb& p);

HPoly index_to_e_word(const Index& k);
AMonomial index_to_g_word(const Index& k);
Index dual_index(const Index& k);

// Admissible monomials of the given weight, in canonical order.
std::vector<AMonomial> admissible_monomials(int weight);
std::vector<AMonomial> admissible_monomials_up_to(int max_weight);

}  // namespace omzv
