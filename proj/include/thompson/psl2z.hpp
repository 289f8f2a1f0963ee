#pragma once

/**
 * @file psl2z.hpp
 * @brief PSL2(Z) as sign-canonical matrices and as normal-form words.
 *
 * Words are read left to right as maps: the word g h acts by x -> h(g(x)).
 * The matrix of a word is therefore the product of the letter matrices in
 * reverse order, so that the Moebius action of word_to_matrix(w) agrees with
 * the action of w. The letter B stands for the inverse of b.
 */

#include "thompson/core.hpp"
#include "thompson/farey.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

class PSL2Matrix {
public:
    PSL2Matrix() : a_(1), b_(0), c_(0), d_(1) {}

    /// Canonicalizes the sign; throws unless ad - bc = 1.
    PSL2Matrix(BigInt a, BigInt b, BigInt c, BigInt d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
        if (a_ * d_ - b_ * c_ != 1) throw DomainError("matrix " + str() + " does not have determinant 1");
        const BigInt& lead = c_ != 0 ? c_ : (d_ != 0 ? d_ : a_);
        if (lead < 0) {
            a_ = -a_, b_ = -b_, c_ = -c_, d_ = -d_;
        }
    }

    static PSL2Matrix identity() { return {}; }
    /// x -> -1/x
    static PSL2Matrix gen_a() { return {0, -1, 1, 0}; }
    /// x -> -1/(x+1)
    static PSL2Matrix gen_b() { return {0, -1, 1, 1}; }

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    const BigInt& d() const { return d_; }

    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

    /// Moebius action on a column vector (p, q); no normalization.
    std::pair<BigInt, BigInt> apply(const BigInt& p, const BigInt& q) const {
        return {a_ * p + b_ * q, c_ * p + d_ * q};
    }

    ExtRational apply(const ExtRational& x) const {
        auto [p, q] = apply(x.num(), x.den());
        return ExtRational::reduced(std::move(p), std::move(q));
    }

    BigInt norm2() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

    std::string str() const {
        return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
    }

    friend bool operator==(const PSL2Matrix&, const PSL2Matrix&) = default;

private:
    BigInt a_, b_, c_, d_;
};

/// Ordinary matrix product x*y.
inline PSL2Matrix matmul(const PSL2Matrix& x, const PSL2Matrix& y) {
    return {x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
            x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d()};
}

inline PSL2Matrix matinv(const PSL2Matrix& x) { return {x.d(), -x.b(), -x.c(), x.a()}; }

inline bool mateq(const PSL2Matrix& x, const PSL2Matrix& y) { return x == y; }

enum class Letter : char { a = 'a', b = 'b', B = 'B' };

/// a^eps1 b^d1 a b^d2 a ... a b^dk a^eps2
class NormalWord {
public:
    NormalWord() = default;

    NormalWord(bool eps1, std::vector<int> deltas, bool eps2)
        : eps1_(eps1), deltas_(std::move(deltas)), eps2_(eps2) {
        for (int d : deltas_)
            if (d != 1 && d != -1) throw DomainError("normal word exponents must be +1 or -1");
        if (deltas_.empty() && eps2_) throw DomainError("normal word with k = 0 must have eps2 = 0");
    }

    bool eps1() const { return eps1_; }
    bool eps2() const { return eps2_; }
    const std::vector<int>& deltas() const { return deltas_; }
    std::size_t k() const { return deltas_.size(); }

    bool is_identity() const { return !eps1_ && deltas_.empty(); }

    std::vector<Letter> letters() const {
        std::vector<Letter> out;
        if (eps1_) out.push_back(Letter::a);
        for (std::size_t i = 0; i < deltas_.size(); ++i) {
            if (i > 0) out.push_back(Letter::a);
            out.push_back(deltas_[i] == 1 ? Letter::b : Letter::B);
        }
        if (eps2_) out.push_back(Letter::a);
        return out;
    }

    NormalWord inverse() const {
        if (deltas_.empty()) return *this;
        std::vector<int> inv(deltas_.rbegin(), deltas_.rend());
        for (int& d : inv) d = -d;
        return NormalWord(eps2_, std::move(inv), eps1_);
    }

    /// Letters over {a, b, B}; the identity prints as "e".
    std::string str() const {
        if (is_identity()) return "e";
        std::string s;
        for (Letter l : letters()) s.push_back(static_cast<char>(l));
        return s;
    }

    friend bool operator==(const NormalWord&, const NormalWord&) = default;
    friend auto operator<=>(const NormalWord& x, const NormalWord& y) {
        if (auto c = x.k() <=> y.k(); c != 0) return c;
        if (auto c = x.eps1_ <=> y.eps1_; c != 0) return c;
        if (auto c = x.deltas_ <=> y.deltas_; c != 0) return c;
        return x.eps2_ <=> y.eps2_;
    }

private:
    bool eps1_ = false;
    std::vector<int> deltas_;
    bool eps2_ = false;
};

/// Free-product rewriting aa -> e, bB -> e, Bb -> e, bb -> B, BB -> b.
inline NormalWord reduce_word(std::span<const Letter> letters) {
    std::vector<Letter> st;
    for (Letter x : letters) {
        if (st.empty()) {
            st.push_back(x);
            continue;
        }
        Letter top = st.back();
        if (top == Letter::a && x == Letter::a) {
            st.pop_back();
        } else if (top == Letter::a || x == Letter::a) {
            st.push_back(x);
        } else if (top != x) {
            st.pop_back();
        } else {
            st.back() = top == Letter::b ? Letter::B : Letter::b;
        }
    }
    // st now alternates a and b-type letters.
    bool eps1 = !st.empty() && st.front() == Letter::a;
    std::vector<int> deltas;
    for (Letter l : st)
        if (l != Letter::a) deltas.push_back(l == Letter::b ? 1 : -1);
    bool eps2 = !deltas.empty() && st.back() == Letter::a;
    return NormalWord(eps1, std::move(deltas), eps2);
}

inline NormalWord concat(const NormalWord& u, const NormalWord& v) {
    auto l = u.letters();
    auto r = v.letters();
    l.insert(l.end(), r.begin(), r.end());
    return reduce_word(l);
}

inline PSL2Matrix letter_matrix(Letter l) {
    switch (l) {
    case Letter::a: return PSL2Matrix::gen_a();
    case Letter::b: return PSL2Matrix::gen_b();
    case Letter::B: return matinv(PSL2Matrix::gen_b());
    }
    return {};
}

inline PSL2Matrix letters_to_matrix(std::span<const Letter> letters) {
    PSL2Matrix m;
    for (Letter l : letters) m = matmul(letter_matrix(l), m);
    return m;
}

inline PSL2Matrix word_to_matrix(const NormalWord& w) { return letters_to_matrix(w.letters()); }

/**
 * Normal form of a matrix. Euclid's algorithm writes m as a product of
 * S = M(a) and powers of T = [[1,1],[0,1]] = M(ba); the letters are then
 * reduced. Every element of PSL2(Z) is reached.
 */
inline NormalWord matrix_to_word(const PSL2Matrix& m) {
    struct Factor {
        bool is_s;
        BigInt power;  // T^power when !is_s
    };
    std::vector<Factor> inverses;  // E_1^-1, E_2^-1, ...
    PSL2Matrix cur = m;
    while (cur.c() != 0) {
        BigInt n = cur.a() / cur.c();
        if (n * cur.c() > cur.a()) n -= 1;  // floor; c > 0 by sign convention
        if (n != 0) {
            cur = PSL2Matrix(cur.a() - n * cur.c(), cur.b() - n * cur.d(), cur.c(), cur.d());
            inverses.push_back({false, n});
        }
        cur = matmul(PSL2Matrix::gen_a(), cur);
        inverses.push_back({true, 0});
    }
    // cur = T^b now.
    inverses.push_back({false, cur.b()});

    std::vector<Letter> letters;
    for (auto it = inverses.rbegin(); it != inverses.rend(); ++it) {
        if (it->is_s) {
            letters.push_back(Letter::a);
            continue;
        }
        BigInt n = it->power;
        for (BigInt i = 0; i < n; ++i) letters.insert(letters.end(), {Letter::b, Letter::a});
        for (BigInt i = 0; i < -n; ++i) letters.insert(letters.end(), {Letter::a, Letter::B});
    }
    return reduce_word(letters);
}

/// |w| in {a, b}: 2k - 1 + eps1 + eps2 for k >= 1, eps1 for k = 0.
inline long word_length_ab(const NormalWord& w) {
    if (w.k() == 0) return w.eps1() ? 1 : 0;
    return 2 * static_cast<long>(w.k()) - 1 + (w.eps1() ? 1 : 0) + (w.eps2() ? 1 : 0);
}

// ---------------------------------------------------------------------------
// Text formats

/// Letters over {a, b, B}; "" and "e" denote the identity.
inline std::vector<Letter> parse_letters(std::string_view text) {
    auto s = detail::trim(text);
    std::vector<Letter> out;
    if (s == "e") return out;
    for (char ch : s) {
        switch (ch) {
        case 'a': out.push_back(Letter::a); break;
        case 'b': out.push_back(Letter::b); break;
        case 'B': out.push_back(Letter::B); break;
        default: throw ParseError("bad letter '" + std::string(1, ch) + "' in word '" + std::string(s) + "'");
        }
    }
    return out;
}

inline NormalWord parse_word(std::string_view text) { return reduce_word(parse_letters(text)); }

/// "[[a,b],[c,d]]" with determinant 1 (either sign representative).
inline PSL2Matrix parse_matrix(std::string_view text) {
    std::string compact;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') compact.push_back(ch);
    if (compact.size() < 9 || compact.substr(0, 2) != "[[" || compact.substr(compact.size() - 2) != "]]")
        throw ParseError("expected [[a,b],[c,d]], got '" + std::string(text) + "'");
    auto body = std::string_view(compact).substr(2, compact.size() - 4);
    auto mid = body.find("],[");
    if (mid == std::string_view::npos) throw ParseError("expected [[a,b],[c,d]], got '" + std::string(text) + "'");
    auto row = [&](std::string_view r) {
        auto comma = r.find(',');
        if (comma == std::string_view::npos) throw ParseError("bad matrix row in '" + std::string(text) + "'");
        return std::pair{detail::parse_integer(r.substr(0, comma), "matrix"), detail::parse_integer(r.substr(comma + 1), "matrix")};
    };
    auto [a, b] = row(body.substr(0, mid));
    auto [c, d] = row(body.substr(mid + 3));
    try {
        return PSL2Matrix(a, b, c, d);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

} // namespace thompson
