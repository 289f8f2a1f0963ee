#pragma once

/**
 * @file farey.hpp
 * @brief Exact arithmetic on the rational projective line.
 *
 * ExtRational is a point of Q u {inf} kept in lowest terms. Infinity has two
 * spellings, 1/0 and -1/0: they are the same point of RP^1 but the spelling
 * records from which side an interval endpoint is approached.
 *
 * Dyadic is an exact p/2^e. The question-mark function maps ExtRational to
 * dyadics of [0,1) by Stern-Brocot descent; it sends the positive ray
 * [0, inf] onto [0, 1/2] and the negative ray [-inf, 0] onto [1/2, 1].
 */

#include "thompson/core.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace thompson {

class ExtRational {
public:
    ExtRational() : num_(0), den_(1) {}

    /// Reduces p/q to lowest terms with a non-negative denominator.
    /// A zero denominator yields 1/0 or -1/0 according to the sign of p.
    static ExtRational reduced(BigInt p, BigInt q) {
        if (p == 0 && q == 0) throw DomainError("0/0 is not a point of the projective line");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        if (q == 0) return ExtRational(p > 0 ? 1 : -1, 0, Canonical{});
        BigInt g = boost::multiprecision::gcd(p < 0 ? BigInt(-p) : p, q);
        return ExtRational(p / g, q / g, Canonical{});
    }

    /// Accepts only canonical parts; anything else is a DomainError.
    static ExtRational canonical(BigInt p, BigInt q) {
        ExtRational r = reduced(p, q);
        if (r.num_ != p || r.den_ != q)
            throw DomainError("non-canonical fraction " + p.str() + "/" + q.str());
        return r;
    }

    static ExtRational integer(long v) { return ExtRational(v, 1, Canonical{}); }
    static ExtRational infinity() { return ExtRational(1, 0, Canonical{}); }
    static ExtRational neg_infinity() { return ExtRational(-1, 0, Canonical{}); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0; }

    /// Equality as points of RP^1 (1/0 and -1/0 coincide).
    bool same_point(const ExtRational& o) const {
        if (is_infinite() || o.is_infinite()) return is_infinite() && o.is_infinite();
        return num_ == o.num_ && den_ == o.den_;
    }

    /// Formal (spelling) equality.
    friend bool operator==(const ExtRational&, const ExtRational&) = default;

    std::string str() const { return num_.str() + "/" + den_.str(); }

    friend std::ostream& operator<<(std::ostream& os, const ExtRational& x) { return os << x.str(); }

private:
    struct Canonical {};
    ExtRational(BigInt p, BigInt q, Canonical) : num_(std::move(p)), den_(std::move(q)) {}

    BigInt num_;
    BigInt den_;
};

/// Position on the circle read counterclockwise from 0: the non-negative
/// reals, then infinity, then the negative reals.
inline std::strong_ordering circle_compare(const ExtRational& x, const ExtRational& y) {
    auto half = [](const ExtRational& v) { return v.is_infinite() ? 1 : (v.num() < 0 ? 2 : 0); };
    int hx = half(x), hy = half(y);
    if (hx != hy) return hx <=> hy;
    if (hx == 1) return std::strong_ordering::equal;
    BigInt lhs = x.num() * y.den();
    BigInt rhs = y.num() * x.den();
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    Dyadic(BigInt num, std::size_t exp) : num_(std::move(num)), exp_(exp) { normalize(); }

    /// 2^power for any integer power.
    static Dyadic pow2(long power) {
        if (power >= 0) return Dyadic(BigInt(1) << power, 0);
        return Dyadic(BigInt(1), static_cast<std::size_t>(-power));
    }

    const BigInt& num() const { return num_; }
    std::size_t exp() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }

    /// Multiplication by 2^power.
    Dyadic scaled(long power) const {
        if (power >= 0) {
            auto p = static_cast<std::size_t>(power);
            if (p <= exp_) return Dyadic(num_, exp_ - p);
            return Dyadic(num_ << (p - exp_), 0);
        }
        return Dyadic(num_, exp_ + static_cast<std::size_t>(-power));
    }

    Dyadic half() const { return scaled(-1); }

    /// Largest integer not above the value.
    BigInt floor() const {
        if (exp_ == 0) return num_;
        BigInt den = BigInt(1) << exp_;
        BigInt q = num_ / den;  // truncates toward zero
        if (num_ < 0 && q * den != num_) q -= 1;
        return q;
    }

    /// Value reduced modulo 1 into [0, 1).
    Dyadic frac() const { return *this - Dyadic(floor(), 0); }

    /// If the value is 2^e returns e.
    std::optional<long> log2_exact() const {
        if (num_ <= 0) return std::nullopt;
        if (exp_ > 0) {
            if (num_ != 1) return std::nullopt;
            return -static_cast<long>(exp_);
        }
        BigInt n = num_;
        long e = 0;
        while ((n & 1) == 0) {
            n >>= 1;
            ++e;
        }
        if (n != 1) return std::nullopt;
        return e;
    }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        auto e = std::max(a.exp_, b.exp_);
        return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
        auto e = std::max(a.exp_, b.exp_);
        return Dyadic((a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_)), e);
    }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_); }
    Dyadic operator-() const { return Dyadic(-num_, exp_); }
    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
    Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

    friend bool operator==(const Dyadic&, const Dyadic&) = default;
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        auto e = std::max(a.exp_, b.exp_);
        BigInt x = a.num_ << (e - a.exp_);
        BigInt y = b.num_ << (e - b.exp_);
        if (x < y) return std::strong_ordering::less;
        if (x > y) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q" with q = 2^exp.
    std::string str() const { return num_.str() + "/" + (BigInt(1) << exp_).str(); }

    friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) { return os << d.str(); }

private:
    void normalize() {
        if (num_ == 0) {
            exp_ = 0;
            return;
        }
        while (exp_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --exp_;
        }
    }

    BigInt num_{0};
    std::size_t exp_{0};
};

/// Consecutive Farey numbers, lo before hi in circle order.
class FareyInterval {
public:
    FareyInterval(ExtRational lo, ExtRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        BigInt det = lo_.num() * hi_.den() - lo_.den() * hi_.num();
        if (det != 1 && det != -1) throw DomainError("not a Farey pair: " + lo_.str() + ", " + hi_.str());
    }
    const ExtRational& lo() const { return lo_; }
    const ExtRational& hi() const { return hi_; }

private:
    ExtRational lo_;
    ExtRational hi_;
};

/// (p+r)/(q+s), reduced. Throws when the formal sum is 0/0.
inline ExtRational mediant(const ExtRational& x, const ExtRational& y) {
    BigInt p = x.num() + y.num();
    BigInt q = x.den() + y.den();
    if (p == 0 && q == 0) throw DomainError("undefined mediant of " + x.str() + " and " + y.str());
    return ExtRational::reduced(std::move(p), std::move(q));
}

inline bool is_farey_pair(const ExtRational& x, const ExtRational& y) {
    BigInt det = x.num() * y.den() - x.den() * y.num();
    return det == 1 || det == -1;
}

/// Minkowski question mark by mediant recursion. The point 0 maps to 0.
inline Dyadic minkowski_q(const ExtRational& x) {
    if (x.is_zero()) return Dyadic(0);
    if (x.is_infinite()) return Dyadic(BigInt(1), 1);

    BigInt lp, lq, hp, hq;
    Dyadic lv, hv;
    if (x.num() > 0) {
        lp = 0, lq = 1, lv = Dyadic(0);
        hp = 1, hq = 0, hv = Dyadic(BigInt(1), 1);
    } else {
        lp = -1, lq = 0, lv = Dyadic(BigInt(1), 1);
        hp = 0, hq = 1, hv = Dyadic(1);
    }
    for (;;) {
        BigInt mp = lp + hp, mq = lq + hq;
        Dyadic mv = (lv + hv).half();
        BigInt lhs = x.num() * mq, rhs = mp * x.den();
        if (lhs == rhs) return mv;
        if (lhs < rhs) {
            hp = std::move(mp), hq = std::move(mq), hv = std::move(mv);
        } else {
            lp = std::move(mp), lq = std::move(mq), lv = std::move(mv);
        }
    }
}

/// Question-mark value of an interval's right endpoint: 0/1 reached from
/// below counts as 1.
inline Dyadic minkowski_q_right(const ExtRational& x) {
    return x.is_zero() ? Dyadic(1) : minkowski_q(x);
}

/// Exact inverse of minkowski_q on [0, 1).
inline ExtRational minkowski_inv(const Dyadic& d) {
    const Dyadic half(BigInt(1), 1);
    if (d.is_negative() || d >= Dyadic(1)) throw DomainError("minkowski_inv expects 0 <= d < 1, got " + d.str());
    if (d.is_zero()) return ExtRational();
    if (d == half) return ExtRational::infinity();

    BigInt lp, lq, hp, hq;
    Dyadic lv, hv;
    if (d < half) {
        lp = 0, lq = 1, lv = Dyadic(0);
        hp = 1, hq = 0, hv = half;
    } else {
        lp = -1, lq = 0, lv = half;
        hp = 0, hq = 1, hv = Dyadic(1);
    }
    for (;;) {
        BigInt mp = lp + hp, mq = lq + hq;
        Dyadic mv = (lv + hv).half();
        if (mv == d) return ExtRational::reduced(std::move(mp), std::move(mq));
        if (d < mv) {
            hp = std::move(mp), hq = std::move(mq), hv = std::move(mv);
        } else {
            lp = std::move(mp), lq = std::move(mq), lv = std::move(mv);
        }
    }
}

// ---------------------------------------------------------------------------
// Text formats

/// "p/q" in lowest terms (infinity as "1/0" or "-1/0"); a bare integer n is n/1.
inline ExtRational parse_ext_rational(std::string_view text) {
    auto s = detail::trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return ExtRational::reduced(detail::parse_integer(s, "rational"), 1);
    BigInt p = detail::parse_integer(s.substr(0, slash), "rational numerator");
    auto qs = s.substr(slash + 1);
    if (!qs.empty() && qs[0] == '-') throw ParseError("negative denominator in '" + std::string(s) + "'");
    BigInt q = detail::parse_integer(qs, "rational denominator");
    try {
        return ExtRational::canonical(p, q);
    } catch (const DomainError& e) {
        throw ParseError(std::string(e.what()) + " in '" + std::string(s) + "'");
    }
}

/// Integer, "p/q" with q a power of two, or "p/2^e". Non-canonical spellings
/// (even numerator over a nontrivial power of two) are rejected.
inline Dyadic parse_dyadic(std::string_view text) {
    auto s = detail::trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Dyadic(detail::parse_integer(s, "dyadic"), 0);
    BigInt p = detail::parse_integer(s.substr(0, slash), "dyadic numerator");
    auto qs = s.substr(slash + 1);
    std::size_t e = 0;
    if (qs.substr(0, 2) == "2^") {
        BigInt eb = detail::parse_integer(qs.substr(2), "dyadic exponent");
        if (eb < 0 || eb > 1'000'000) throw ParseError("bad dyadic exponent in '" + std::string(s) + "'");
        e = static_cast<std::size_t>(eb);
    } else {
        if (!qs.empty() && qs[0] == '-') throw ParseError("negative denominator in '" + std::string(s) + "'");
        BigInt q = detail::parse_integer(qs, "dyadic denominator");
        if (q <= 0 || (q & (q - 1)) != 0) throw ParseError("denominator is not a power of two in '" + std::string(s) + "'");
        e = boost::multiprecision::msb(q);
    }
    if (e > 0 && (p & 1) == 0) throw ParseError("non-canonical dyadic '" + std::string(s) + "'");
    return Dyadic(std::move(p), e);
}

} // namespace thompson
