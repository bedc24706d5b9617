#include "omzv/word_algebra.hpp"

#include "omzv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>

namespace omzv {

// ---------------------------------------------------------------- words

ABWord::ABWord(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
        if (c != 'a' && c != 'b') throw ParseError(std::string("invalid letter '") + c + "' in word");
}

ABWord ABWord::appended(char letter) const { return ABWord(letters_ + letter, trusted{}); }

int ABWord::count(char letter) const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

std::string ABWord::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += letters_[i];
    }
    return out;
}

ALetter ALetter::g(int k) {
    if (k < 1) throw DomainError("g_k requires k >= 1");
    return ALetter(k);
}

std::string ALetter::str() const { return is_e1g1() ? "E" : "G" + std::to_string(k_); }

AMonomial AMonomial::from_blocks(std::span<const Block> blocks) {
    std::vector<ALetter> letters;
    for (const Block& b : blocks) {
        if (b.alpha < 0 || b.beta < 0) throw DomainError("negative block exponent");
        for (int i = 0; i < b.alpha; ++i) letters.push_back(ALetter::e1g1());
        letters.push_back(ALetter::g(b.beta + 1));
    }
    return AMonomial(std::move(letters));
}

int AMonomial::weight() const noexcept {
    int w = 0;
    for (const auto& l : letters_) w += l.weight();
    return w;
}

int AMonomial::g_count() const noexcept {
    return static_cast<int>(std::count_if(letters_.begin(), letters_.end(), [](const ALetter& l) { return !l.is_e1g1(); }));
}

bool AMonomial::admissible() const noexcept { return letters_.empty() || !letters_.back().is_e1g1(); }

std::vector<Block> AMonomial::blocks() const {
    if (!admissible()) throw DomainError("monomial " + str() + " ends with E");
    std::vector<Block> out;
    int alpha = 0;
    for (const auto& l : letters_) {
        if (l.is_e1g1()) {
            ++alpha;
        } else {
            out.push_back({alpha, l.k() - 1});
            alpha = 0;
        }
    }
    return out;
}

AMonomial AMonomial::appended(const ALetter& letter) const {
    auto letters = letters_;
    letters.push_back(letter);
    return AMonomial(std::move(letters));
}

AMonomial AMonomial::without_last() const {
    return AMonomial(std::vector<ALetter>(letters_.begin(), letters_.end() - 1));
}

std::string AMonomial::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += letters_[i].str();
    }
    return out;
}

AMonomial operator+(const AMonomial& lhs, const AMonomial& rhs) {
    auto letters = lhs.letters_;
    letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
    return AMonomial(std::move(letters));
}

std::strong_ordering operator<=>(const AMonomial& lhs, const AMonomial& rhs) {
    if (auto c = lhs.weight() <=> rhs.weight(); c != 0) return c;
    if (auto c = lhs.letters_.size() <=> rhs.letters_.size(); c != 0) return c;
    for (std::size_t i = 0; i < lhs.letters_.size(); ++i)
        if (auto c = lhs.letters_[i].k() <=> rhs.letters_[i].k(); c != 0) return c;
    return std::strong_ordering::equal;
}

Index::Index(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw DomainError("index must be non-empty");
    for (int k : parts)
        if (k < 1) throw DomainError("index entries must be positive");
}

int Index::weight() const noexcept {
    int w = 0;
    for (int k : parts) w += k;
    return w;
}

std::string Index::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts[i]);
    }
    return out;
}

Index Index::extended() const {
    auto p = parts;
    p.push_back(1);
    return Index(std::move(p));
}

Index Index::raised() const {
    auto p = parts;
    p.back() += 1;
    return Index(std::move(p));
}

Index parse_index(std::string_view text) {
    std::vector<int> parts;
    std::string current;
    auto flush = [&] {
        if (current.empty()) throw ParseError("malformed index '" + std::string(text) + "'");
        if (current.size() > 6) throw ParseError("index entry too large in '" + std::string(text) + "'");
        parts.push_back(std::stoi(current));
        current.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == ',') {
            flush();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            current += c;
        } else {
            throw ParseError("malformed index '" + std::string(text) + "'");
        }
    }
    flush();
    for (int k : parts)
        if (k < 1) throw ParseError("index entries must be positive in '" + std::string(text) + "'");
    return Index(std::move(parts));
}

// ---------------------------------------------------------------- basic maps

namespace {

HPoly append_letter(const HPoly& p, char letter) {
    HPoly out;
    for (const auto& [w, c] : p) out.add(w.appended(letter), c);
    return out;
}

AComb append_letter(const AComb& p, const ALetter& letter) {
    AComb out;
    for (const auto& [m, c] : p) out.add(m.appended(letter), c);
    return out;
}

HPoly word_poly(const std::string& letters) { return HPoly(ABWord(letters)); }

}  // namespace

HPoly concatenate(const HPoly& lhs, const HPoly& rhs) {
    HPoly out;
    for (const auto& [w1, c1] : lhs)
        for (const auto& [w2, c2] : rhs) out.add(w1 + w2, c1 * c2);
    return out;
}

HPoly expand(const AMonomial& m) {
    std::string letters;
    int hbar_power = 0;
    for (const auto& l : m.letters()) {
        if (l.is_e1g1()) {
            letters += 'b';
            ++hbar_power;
        } else {
            letters += 'b';
            letters.append(static_cast<std::size_t>(l.k()), 'a');
        }
    }
    return HPoly(ABWord(letters), HbarLaurent::hbar_power(hbar_power));
}

HPoly expand(const AComb& p) {
    HPoly out;
    for (const auto& [m, c] : p) out += expand(m) * c;
    return out;
}

AComb to_a_basis(const HPoly& p) {
    AComb out;
    for (const auto& [w, c] : p) {
        const std::string& s = w.letters();
        if (!s.empty() && s.front() != 'b')
            throw DomainError("word '" + w.str() + "' starts with a and is not in the span of the alphabet");
        std::vector<ALetter> letters;
        int bare = 0;
        std::size_t i = 0;
        while (i < s.size()) {
            std::size_t j = i + 1;
            while (j < s.size() && s[j] == 'a') ++j;
            int k = static_cast<int>(j - i - 1);
            if (k == 0) {
                letters.push_back(ALetter::e1g1());
                ++bare;
            } else {
                letters.push_back(ALetter::g(k));
            }
            i = j;
        }
        out.add(AMonomial(std::move(letters)), c * HbarLaurent::hbar_power(-bare));
    }
    return out;
}

// ---------------------------------------------------------------- products

namespace {

class ShuffleMemo {
public:
    const HPoly& words(const ABWord& u, const ABWord& v) {
        std::string key = u.letters() + '|' + v.letters();
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        HPoly result = compute(u, v);
        return memo_.emplace(std::move(key), std::move(result)).first->second;
    }

private:
    HPoly compute(const ABWord& u, const ABWord& v) {
        if (u.empty()) return HPoly(v);
        if (v.empty()) return HPoly(u);
        if (u.back() == 'b') return append_letter(words(u.without_last(), v), 'b');
        if (v.back() == 'b') return append_letter(words(u, v.without_last()), 'b');
        const ABWord u0 = u.without_last();
        const ABWord v0 = v.without_last();
        HPoly inner = words(u, v0);
        inner += words(u0, v);
        inner += words(u0, v0) * HbarLaurent::hbar_power(1);
        return append_letter(inner, 'a');
    }

    std::unordered_map<std::string, HPoly> memo_;
};

std::pair<HbarLaurent, ALetter> circ(const ALetter& u, const ALetter& v) {
    if (u.is_e1g1() && v.is_e1g1()) return {HbarLaurent::hbar_power(1), ALetter::e1g1()};
    if (u.is_e1g1()) return {HbarLaurent::hbar_power(1), v};
    if (v.is_e1g1()) return {HbarLaurent::hbar_power(1), u};
    return {HbarLaurent(1), ALetter::g(u.k() + v.k())};
}

class HarmonicMemo {
public:
    const AComb& monomials(const AMonomial& u, const AMonomial& v) {
        std::string key = u.str() + '|' + v.str();
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        AComb result = compute(u, v);
        return memo_.emplace(std::move(key), std::move(result)).first->second;
    }

private:
    AComb compute(const AMonomial& w, const AMonomial& w2) {
        if (w.empty()) return AComb(w2);
        if (w2.empty()) return AComb(w);
        const ALetter u = w.letters().back();
        const ALetter v = w2.letters().back();
        const AMonomial w0 = w.without_last();
        const AMonomial w20 = w2.without_last();
        AComb out = append_letter(monomials(w0, w2), u);
        out += append_letter(monomials(w, w20), v);
        auto [coeff, letter] = circ(u, v);
        out += append_letter(monomials(w0, w20), letter) * coeff;
        return out;
    }

    std::unordered_map<std::string, AComb> memo_;
};

}  // namespace

HPoly shuffle(const HPoly& lhs, const HPoly& rhs) {
    ShuffleMemo memo;
    HPoly out;
    for (const auto& [w1, c1] : lhs)
        for (const auto& [w2, c2] : rhs) out += memo.words(w1, w2) * (c1 * c2);
    return out;
}

AComb shuffle(const AComb& lhs, const AComb& rhs) { return to_a_basis(shuffle(expand(lhs), expand(rhs))); }

AComb harmonic(const AComb& lhs, const AComb& rhs) {
    HarmonicMemo memo;
    AComb out;
    for (const auto& [m1, c1] : lhs)
        for (const auto& [m2, c2] : rhs) out += memo.monomials(m1, m2) * (c1 * c2);
    return out;
}

HPoly harmonic(const HPoly& lhs, const HPoly& rhs) { return expand(harmonic(to_a_basis(lhs), to_a_basis(rhs))); }

HPoly sigma(const HPoly& p) {
    HPoly out;
    for (const auto& [w, c] : p) {
        std::string s(w.letters().rbegin(), w.letters().rend());
        for (char& ch : s) ch = ch == 'a' ? 'b' : 'a';
        out.add(ABWord(std::move(s)), c * HbarLaurent::hbar_power(w.count('a') - w.count('b')));
    }
    return out;
}

AComb sigma(const AComb& p) { return to_a_basis(sigma(expand(p))); }

bool in_admissible_span(const AComb& p) {
    for (const auto& [m, c] : p)
        if (!m.admissible() || c.min_degree() < 0) return false;
    return true;
}

bool in_admissible_span(const HPoly& p) {
    try {
        return in_admissible_span(to_a_basis(p));
    } catch (const DomainError&) {
        return false;
    }
}

HPoly satoh_residual(const HPoly& lhs, const HPoly& rhs) {
    if (!in_admissible_span(lhs) || !in_admissible_span(rhs))
        throw DomainError("satoh_residual requires arguments in the span of admissible monomials");
    return harmonic(lhs, rhs) - sigma(shuffle(sigma(lhs), sigma(rhs)));
}

// ---------------------------------------------------------------- indices

HPoly index_to_e_word(const Index& k) {
    HPoly out(ABWord{});
    for (int part : k.parts) {
        HPoly e = word_poly("b" + std::string(static_cast<std::size_t>(part), 'a'));
        e += word_poly("b" + std::string(static_cast<std::size_t>(part - 1), 'a')) * HbarLaurent::hbar_power(1);
        out = concatenate(out, e);
    }
    return out;
}

AMonomial index_to_g_word(const Index& k) {
    std::vector<ALetter> letters;
    for (int part : k.parts) letters.push_back(ALetter::g(part));
    return AMonomial(std::move(letters));
}

Index dual_index(const Index& k) {
    if (!k.admissible()) throw DomainError("dual index requires an admissible index, got (" + k.str() + ")");
    // k = ({1}^{ones_1}, bump_1 + 1, ...); blocks store (ones + 1, bump).
    std::vector<std::pair<int, int>> blocks;
    int ones = 0;
    for (int part : k.parts) {
        if (part == 1) {
            ++ones;
        } else {
            blocks.emplace_back(ones + 1, part - 1);
            ones = 0;
        }
    }
    std::vector<int> out;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        auto [ones_plus_one, bump] = *it;
        out.insert(out.end(), static_cast<std::size_t>(bump - 1), 1);
        out.push_back(ones_plus_one + 1);
    }
    return Index(std::move(out));
}

std::vector<AMonomial> admissible_monomials(int weight) {
    std::vector<AMonomial> out;
    if (weight < 0) return out;
    if (weight == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<ALetter> current;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            if (!current.empty() && !current.back().is_e1g1()) out.emplace_back(current);
            return;
        }
        current.push_back(ALetter::e1g1());
        rec(remaining - 1);
        current.pop_back();
        for (int k = 1; k <= remaining; ++k) {
            current.push_back(ALetter::g(k));
            rec(remaining - k);
            current.pop_back();
        }
    };
    rec(weight);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AMonomial> admissible_monomials_up_to(int max_weight) {
    std::vector<AMonomial> out;
    for (int w = 1; w <= max_weight; ++w) {
        auto part = admissible_monomials(w);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

// ---------------------------------------------------------------- text I/O

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    HPoly parse() {
        HPoly result = sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static bool starts_factor(char c) {
        return c == '(' || c == 'h' || c == 'a' || c == 'b' || std::isdigit(static_cast<unsigned char>(c));
    }

    HPoly sum() {
        HPoly result;
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negate = c == '-';
            ++pos_;
        }
        for (;;) {
            HPoly t = term();
            if (negate) t = -t;
            result += t;
            c = peek();
            if (c != '+' && c != '-') break;
            negate = c == '-';
            ++pos_;
        }
        return result;
    }

    HPoly term() {
        HPoly result = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                result = concatenate(result, factor());
            } else if (starts_factor(c)) {
                result = concatenate(result, factor());
            } else {
                break;
            }
        }
        return result;
    }

    int integer() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits || pos_ - digits > 6) fail("expected exponent");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    HPoly factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            HPoly inner = sum();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (c == 'h') {
            ++pos_;
            int e = 1;
            if (peek() == '^') {
                ++pos_;
                e = integer();
            }
            return HPoly(ABWord{}, HbarLaurent::hbar_power(e));
        }
        if (c == 'a' || c == 'b') {
            std::string letters;
            while (c == 'a' || c == 'b') {
                letters += c;
                ++pos_;
                c = peek();
            }
            return HPoly(ABWord(letters));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
                ++pos_;
            return HPoly(ABWord{}, HbarLaurent(parse_rational(text_.substr(start, pos_ - start))));
        }
        fail("expected a factor");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Renders coefficient and key in the "coeff*key" form shared by both printers.
template <class Key, class Print>
std::string render(const LinearCombination<Key, HbarLaurent>& p, Print key_str) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : p) {
        const std::string body = key_str(key);
        const bool unit_key = body == "1";
        std::string piece;
        bool negative = false;
        if (c.terms().size() == 1) {
            auto [e, q] = *c.terms().begin();
            negative = sgn(q) < 0;
            HbarLaurent mag = HbarLaurent::hbar_power(e, abs(q));
            bool is_one = e == 0 && abs(q) == 1;
            if (is_one) {
                piece = body;
            } else {
                piece = mag.str();
                if (!unit_key) piece += "*" + body;
            }
        } else {
            piece = "(" + c.str() + ")";
            if (!unit_key) piece += "*" + body;
        }
        if (first) {
            out += negative ? "-" + piece : piece;
        } else {
            out += (negative ? " - " : " + ") + piece;
        }
        first = false;
    }
    return out;
}

}  // namespace

HPoly parse_hpoly(std::string_view text) { return PolyParser(text).parse(); }

std::string to_string(const HPoly& p) {
    return render(p, [](const ABWord& w) { return w.str(); });
}

std::string to_string(const AComb& p) {
    return render(p, [](const AMonomial& m) { return m.str(); });
}

AMonomial parse_amonomial(std::string_view text) {
    std::vector<ALetter> letters;
    std::size_t pos = 0;
    bool unit = false;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
        std::string_view tok = text.substr(pos, end - pos);
        pos = end;
        if (tok == "1") {
            unit = true;
        } else if (tok == "E") {
            letters.push_back(ALetter::e1g1());
        } else if (tok.size() >= 2 && tok[0] == 'G' && tok.size() <= 7 &&
                   std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            int k = std::stoi(std::string(tok.substr(1)));
            if (k < 1) throw ParseError("G index must be positive in '" + std::string(text) + "'");
            letters.push_back(ALetter::g(k));
        } else {
            throw ParseError("unknown letter '" + std::string(tok) + "' in '" + std::string(text) + "'");
        }
    }
    if (unit && !letters.empty()) throw ParseError("'1' cannot be combined with letters in '" + std::string(text) + "'");
    if (!unit && letters.empty()) throw ParseError("empty monomial");
    return AMonomial(std::move(letters));
}

}  // namespace omzv
