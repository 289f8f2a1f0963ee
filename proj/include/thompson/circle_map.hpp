#pragma once

/**
 * @file circle_map.hpp
 * @brief Analytic models of T and the conjugation between them.
 *
 * PLMap is a piecewise-linear circle map with dyadic breakpoints and
 * power-of-two slopes. Breakpoints (x, y) have x running over [0, 1] and y
 * a continuous lift with y_0 in [0, 1) and y_k = y_0 + 1.
 *
 * PPMap is a piecewise-PSL2(Z) homeomorphism of RP^1. Its pieces are listed
 * in circle order starting at 0, always split at 0 and at infinity; infinity
 * is spelled 1/0 as the right end of the positive ray and -1/0 as the left
 * end of the negative ray.
 *
 * Composition follows the word convention of psl2z.hpp: compose(f, g)
 * applies f first.
 */

#include "thompson/core.hpp"
#include "thompson/farey.hpp"
#include "thompson/psl2z.hpp"
#include "thompson/tree_pair.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

struct Breakpoint {
    Dyadic x;
    Dyadic y;
    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

class PLMap {
public:
    PLMap() : breaks_{{Dyadic(0), Dyadic(0)}, {Dyadic(1), Dyadic(1)}} {}

    static PLMap identity() { return {}; }

    /// Validates and canonicalizes (drops interior breakpoints between
    /// segments of equal slope).
    static PLMap from_breaks(std::vector<Breakpoint> breaks) {
        if (breaks.size() < 2) throw DomainError("a PL map needs at least two breakpoints");
        if (breaks.front().x != Dyadic(0) || breaks.back().x != Dyadic(1))
            throw DomainError("breakpoints must start at x = 0 and end at x = 1");
        const Dyadic& y0 = breaks.front().y;
        if (y0.is_negative() || y0 >= Dyadic(1)) throw DomainError("y_0 must lie in [0, 1)");
        if (breaks.back().y != y0 + Dyadic(1)) throw DomainError("y_k must equal y_0 + 1");
        std::vector<long> slopes;
        for (std::size_t i = 1; i < breaks.size(); ++i) {
            Dyadic dx = breaks[i].x - breaks[i - 1].x;
            Dyadic dy = breaks[i].y - breaks[i - 1].y;
            if (dx <= Dyadic(0) || dy <= Dyadic(0)) throw DomainError("breakpoints must be strictly increasing");
            auto s = slope_log2(dx, dy);
            if (!s) throw DomainError("slope between x = " + breaks[i - 1].x.str() + " and " + breaks[i].x.str() + " is not a power of two");
            slopes.push_back(*s);
        }
        PLMap f;
        f.breaks_.clear();
        f.breaks_.push_back(breaks.front());
        for (std::size_t i = 1; i + 1 < breaks.size(); ++i)
            if (slopes[i - 1] != slopes[i]) f.breaks_.push_back(breaks[i]);
        f.breaks_.push_back(breaks.back());
        return f;
    }

    /// Builds a map from its values at points that include every breakpoint.
    /// `xs` is strictly increasing from 0 to 1; `value` returns circle values
    /// in [0, 1).
    static PLMap from_samples(const std::vector<Dyadic>& xs, const std::function<Dyadic(const Dyadic&)>& value) {
        std::vector<Breakpoint> out;
        Dyadic prev = value(xs.front());
        out.push_back({xs.front(), prev});
        for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
            Dyadic z = value(xs[i]);
            Dyadic step = (z - prev).frac();
            if (step.is_zero()) throw DomainError("map is not injective");
            out.push_back({xs[i], out.back().y + step});
            prev = z;
        }
        out.push_back({xs.back(), out.front().y + Dyadic(1)});
        return from_breaks(std::move(out));
    }

    const std::vector<Breakpoint>& breaks() const { return breaks_; }
    std::size_t piece_count() const { return breaks_.size() - 1; }

    /// log2 of the slope on piece i (between breaks i and i+1).
    long slope(std::size_t i) const {
        return *slope_log2(breaks_[i + 1].x - breaks_[i].x, breaks_[i + 1].y - breaks_[i].y);
    }

    /// Lifted value at x in [0, 1].
    Dyadic eval_lift(const Dyadic& x) const {
        if (x.is_negative() || x > Dyadic(1)) throw DomainError("x outside [0, 1]");
        std::size_t i = segment_of(x);
        return breaks_[i].y + (x - breaks_[i].x).scaled(slope(i));
    }

    /// Circle value in [0, 1).
    Dyadic operator()(const Dyadic& x) const { return eval_lift(x).frac(); }

    /// x in [0, 1) with f(x) = y on the circle.
    Dyadic preimage(const Dyadic& y) const {
        Dyadic t = y.frac();
        if (t < breaks_.front().y) t += Dyadic(1);
        std::size_t i = 0;
        while (i + 2 < breaks_.size() && breaks_[i + 1].y <= t) ++i;
        Dyadic x = breaks_[i].x + (t - breaks_[i].y).scaled(-slope(i));
        return x == Dyadic(1) ? Dyadic(0) : x;
    }

    /// "x,y; x,y; ..."
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < breaks_.size(); ++i) {
            if (i) s += "; ";
            s += fmt(breaks_[i].x) + "," + fmt(breaks_[i].y);
        }
        return s;
    }

    friend bool operator==(const PLMap&, const PLMap&) = default;

    static std::optional<long> slope_log2(const Dyadic& dx, const Dyadic& dy) {
        if (dx <= Dyadic(0) || dy <= Dyadic(0)) return std::nullopt;
        // Split each value as odd * 2^e and compare the odd parts.
        auto split = [](const Dyadic& v) {
            BigInt n = v.num();
            long e = -static_cast<long>(v.exp());
            while ((n & 1) == 0) {
                n >>= 1;
                ++e;
            }
            return std::pair{n, e};
        };
        auto [nx, ex] = split(dx);
        auto [ny, ey] = split(dy);
        if (nx != ny) return std::nullopt;
        return ey - ex;
    }

private:
    static std::string fmt(const Dyadic& d) { return d.exp() == 0 ? d.num().str() : d.str(); }

    std::size_t segment_of(const Dyadic& x) const {
        std::size_t i = 0;
        while (i + 2 < breaks_.size() && breaks_[i + 1].x <= x) ++i;
        return i;
    }

    std::vector<Breakpoint> breaks_;
};

namespace detail {

inline void add_point(std::vector<Dyadic>& xs, Dyadic x) {
    xs.push_back(std::move(x));
}

inline std::vector<Dyadic> sorted_unit_points(std::vector<Dyadic> xs) {
    xs.push_back(Dyadic(0));
    xs.push_back(Dyadic(1));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

} // namespace detail

/// f then g.
inline PLMap pl_compose(const PLMap& f, const PLMap& g) {
    std::vector<Dyadic> xs;
    for (const auto& b : f.breaks()) detail::add_point(xs, b.x);
    for (const auto& b : g.breaks()) detail::add_point(xs, f.preimage(b.x));
    return PLMap::from_samples(detail::sorted_unit_points(std::move(xs)),
                               [&](const Dyadic& x) { return g(f(x)); });
}

inline PLMap pl_invert(const PLMap& f) {
    std::vector<Dyadic> xs;
    for (const auto& b : f.breaks()) detail::add_point(xs, b.y.frac());
    return PLMap::from_samples(detail::sorted_unit_points(std::move(xs)),
                               [&](const Dyadic& y) { return f.preimage(y); });
}

inline bool pl_eq(const PLMap& f, const PLMap& g) { return f == g; }

/// "x,y; x,y; ..." with dyadic literals.
inline PLMap parse_plmap(std::string_view text) {
    std::vector<Breakpoint> breaks;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        auto item = detail::trim(text.substr(start, end - start));
        auto comma = item.find(',');
        if (comma == std::string_view::npos) throw ParseError("expected x,y in PL map, got '" + std::string(item) + "'");
        breaks.push_back({parse_dyadic(item.substr(0, comma)), parse_dyadic(item.substr(comma + 1))});
        start = end + 1;
    }
    try {
        return PLMap::from_breaks(std::move(breaks));
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid PL map: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Diagrams <-> PL maps

inline PLMap plmap_from_diagram(const TreePairDiagram& d) {
    auto starts = [](const BinaryTree& t) {
        std::vector<std::pair<Dyadic, Dyadic>> out;  // (start, length)
        Dyadic pos(0);
        for (std::size_t depth : t.leaf_depths()) {
            Dyadic len = Dyadic::pow2(-static_cast<long>(depth));
            out.emplace_back(pos, len);
            pos += len;
        }
        return out;
    };
    auto src = starts(d.source());
    auto tgt = starts(d.target());
    std::vector<Breakpoint> breaks;
    Dyadic y = tgt[d.rot() - 1].first;
    for (std::size_t i = 1; i <= d.leaf_count(); ++i) {
        breaks.push_back({src[i - 1].first, y});
        y += tgt[d.sigma(i) - 1].second;
    }
    breaks.push_back({Dyadic(1), breaks.front().y + Dyadic(1)});
    return PLMap::from_breaks(std::move(breaks));
}

/// Reduced diagram of a PL map: the coarsest standard dyadic subdivision on
/// which f is linear onto standard dyadic intervals.
inline TreePairDiagram diagram_from_plmap(const PLMap& f) {
    struct Image {
        Dyadic start;
        std::size_t depth;
    };
    std::string source;
    std::vector<Image> images;
    const auto& br = f.breaks();

    auto visit = [&](auto&& self, const Dyadic& x, std::size_t depth) -> void {
        if (depth > 4096) throw DomainError("breakpoint set is not a standard dyadic partition");
        Dyadic len = Dyadic::pow2(-static_cast<long>(depth));
        Dyadic end = x + len;
        bool linear = std::none_of(br.begin(), br.end(), [&](const Breakpoint& b) { return x < b.x && b.x < end; });
        if (linear) {
            Dyadic y = f.eval_lift(x);
            Dyadic ylen = f.eval_lift(end) - y;
            auto e = ylen.log2_exact();
            Dyadic ystart = y.frac();
            if (e && *e <= 0 && ystart.scaled(-*e).exp() == 0) {
                source.push_back('0');
                images.push_back({ystart, static_cast<std::size_t>(-*e)});
                return;
            }
        }
        source.push_back('1');
        self(self, x, depth + 1);
        self(self, x + len.half(), depth + 1);
    };
    visit(visit, Dyadic(0), 0);

    std::vector<std::size_t> order(images.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return images[l].start < images[r].start; });
    std::vector<std::size_t> depths;
    std::size_t rot = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        depths.push_back(images[order[pos]].depth);
        if (order[pos] == 0) rot = pos + 1;
    }
    auto target = BinaryTree::from_leaf_depths(depths);
    if (!target) throw DomainError("image intervals do not form a standard dyadic partition");
    TreePairDiagram d(BinaryTree(source), rot, *target);
    for (std::size_t i = 1; i <= d.leaf_count(); ++i)
        assert(order[d.sigma(i) - 1] == i - 1);
    return d;
}

// ---------------------------------------------------------------------------
// Piecewise-projective maps

struct PPPiece {
    ExtRational lo;
    ExtRational hi;
    PSL2Matrix mat;
    friend bool operator==(const PPPiece&, const PPPiece&) = default;
};

namespace detail {

// Spelling of a breakpoint used as a piece's left end.
inline ExtRational as_left_end(const ExtRational& x) { return x.is_infinite() ? ExtRational::neg_infinity() : x; }
// ... and as a right end.
inline ExtRational as_right_end(const ExtRational& x) { return x.is_infinite() ? ExtRational::infinity() : x; }

// x in the closed arc [lo, hi]; a right end at 0 means the end of the circle.
inline bool in_arc(const ExtRational& x, const ExtRational& lo, const ExtRational& hi) {
    if (circle_compare(lo, x) > 0) return false;
    return hi.is_zero() || circle_compare(x, hi) <= 0;
}

inline bool strictly_inside(const ExtRational& x, const ExtRational& lo, const ExtRational& hi) {
    if (circle_compare(lo, x) >= 0) return false;
    return hi.is_zero() ? !x.is_zero() : circle_compare(x, hi) < 0;
}

// A point strictly inside a piece. Pieces never straddle 0 or infinity, so
// the mediant of the spelled endpoints works.
inline ExtRational interior_point(const ExtRational& lo, const ExtRational& hi) {
    return mediant(as_left_end(lo), as_right_end(hi));
}

} // namespace detail

class PPMap {
public:
    /// Identity, split at 0 and infinity.
    PPMap()
        : pieces_{{ExtRational(), ExtRational::infinity(), PSL2Matrix()},
                  {ExtRational::neg_infinity(), ExtRational(), PSL2Matrix()}} {}

    static PPMap identity() { return {}; }

    /**
     * Pieces in cyclic order, starting anywhere. They are rotated to start at
     * 0 and split at 0 and infinity. Throws unless consecutive pieces share
     * endpoints and agree there.
     */
    static PPMap from_pieces(std::vector<PPPiece> pieces) {
        if (pieces.empty()) throw DomainError("PP map without pieces");
        const std::size_t n = pieces.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& p = pieces[i];
            const auto& q = pieces[(i + 1) % n];
            if (!p.hi.same_point(q.lo)) throw DomainError("pieces are not contiguous at " + p.hi.str());
            if (!p.mat.apply(p.hi).same_point(q.mat.apply(q.lo))) throw DomainError("PP map is discontinuous at " + p.hi.str());
        }
        // Cut every piece at 0 and infinity, then rotate so that 0 comes first.
        std::vector<PPPiece> cut;
        for (const auto& p : pieces) {
            std::vector<ExtRational> pts{p.lo};
            for (const ExtRational& c : {ExtRational(), ExtRational::infinity()})
                if (crosses(p.lo, p.hi, c)) pts.push_back(c);
            std::sort(pts.begin() + 1, pts.end(), [&](const auto& u, const auto& v) {
                return cyclic_offset_less(p.lo, u, v);
            });
            pts.push_back(p.hi);
            for (std::size_t i = 0; i + 1 < pts.size(); ++i) cut.push_back({pts[i], pts[i + 1], p.mat});
        }
        auto first = std::find_if(cut.begin(), cut.end(), [](const PPPiece& p) { return p.lo.is_zero(); });
        if (first == cut.end()) throw DomainError("PP map pieces do not cover the circle");
        std::rotate(cut.begin(), first, cut.end());
        for (auto& p : cut) {
            p.lo = detail::as_left_end(p.lo);
            p.hi = detail::as_right_end(p.hi);
        }
        // Every breakpoint appears once around the circle.
        for (std::size_t i = 0; i + 1 < cut.size(); ++i)
            if (cut[i + 1].lo.is_zero()) throw DomainError("PP map pieces wind around the circle more than once");
        PPMap m;
        m.pieces_ = std::move(cut);
        return m;
    }

    const std::vector<PPPiece>& pieces() const { return pieces_; }
    std::size_t piece_count() const { return pieces_.size(); }

    const PPPiece& piece_at(const ExtRational& x) const {
        for (const auto& p : pieces_)
            if (detail::in_arc(x, p.lo, p.hi)) return p;
        throw DomainError("point not covered by PP map");
    }

    ExtRational operator()(const ExtRational& x) const { return piece_at(x).mat.apply(x); }

    /// Merges neighbours with equal matrices, keeping the cuts at 0 and infinity.
    PPMap canonical() const {
        PPMap m;
        m.pieces_.clear();
        for (const auto& p : pieces_) {
            if (!m.pieces_.empty() && m.pieces_.back().mat == p.mat && !p.lo.is_infinite()) {
                m.pieces_.back().hi = p.hi;
            } else {
                m.pieces_.push_back(p);
            }
        }
        return m;
    }

    /// "lo..hi:[[a,b],[c,d]]; ..."
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
            if (i) s += "; ";
            s += pieces_[i].lo.str() + ".." + pieces_[i].hi.str() + ":" + pieces_[i].mat.str();
        }
        return s;
    }

    friend bool operator==(const PPMap&, const PPMap&) = default;

private:
    // c lies strictly inside the arc from lo to hi (cyclic, hi == lo meaning
    // the whole circle is not allowed).
    static bool crosses(const ExtRational& lo, const ExtRational& hi, const ExtRational& c) {
        return cyclic_offset_less(lo, c, hi) && !c.same_point(lo);
    }

    // Is u before v when walking counterclockwise from base?
    static bool cyclic_offset_less(const ExtRational& base, const ExtRational& u, const ExtRational& v) {
        auto rank = [&](const ExtRational& x) { return circle_compare(x, base) < 0 ? 1 : 0; };
        int ru = rank(u), rv = rank(v);
        if (ru != rv) return ru < rv;
        return circle_compare(u, v) < 0;
    }

    std::vector<PPPiece> pieces_;
};

inline bool pp_eq(const PPMap& f, const PPMap& g) { return f.canonical() == g.canonical(); }

inline ExtRational pp_apply(const PPMap& f, const ExtRational& x) { return f(x); }

/// f then g; canonical result.
inline PPMap pp_compose(const PPMap& f, const PPMap& g) {
    std::vector<ExtRational> cuts;
    for (const auto& p : f.pieces()) cuts.push_back(p.lo);
    for (const auto& q : g.pieces()) {
        for (const auto& p : f.pieces()) {
            ExtRational x = matinv(p.mat).apply(q.lo);
            if (detail::in_arc(x, p.lo, p.hi)) cuts.push_back(x);
        }
    }
    cuts.push_back(ExtRational::infinity());
    std::sort(cuts.begin(), cuts.end(), [](const auto& u, const auto& v) { return circle_compare(u, v) < 0; });
    cuts.erase(std::unique(cuts.begin(), cuts.end(), [](const auto& u, const auto& v) { return u.same_point(v); }), cuts.end());

    std::vector<PPPiece> pieces;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        ExtRational lo = detail::as_left_end(cuts[i]);
        ExtRational hi = i + 1 < cuts.size() ? detail::as_right_end(cuts[i + 1]) : ExtRational();
        ExtRational mid = detail::interior_point(lo, hi);
        const auto& fp = f.piece_at(mid);
        const auto& gp = g.piece_at(fp.mat.apply(mid));
        pieces.push_back({lo, hi, matmul(gp.mat, fp.mat)});
    }
    return PPMap::from_pieces(std::move(pieces)).canonical();
}

/// Generator maps on the Farey partitions that Inn_? sends to tree pairs.
inline PPMap ppmap_of_letter(Letter l) {
    const ExtRational zero, inf = ExtRational::infinity(), ninf = ExtRational::neg_infinity();
    const ExtRational m1 = ExtRational::integer(-1);
    PSL2Matrix m = letter_matrix(l);
    if (l == Letter::a) return PPMap::from_pieces({{zero, inf, m}, {ninf, zero, m}});
    return PPMap::from_pieces({{zero, inf, m}, {ninf, m1, m}, {m1, zero, m}});
}

inline PPMap ppmap_from_letters(std::span<const Letter> letters) {
    if (letters.empty()) return PPMap::identity();
    if (letters.size() == 1) return ppmap_of_letter(letters.front());
    PPMap acc = ppmap_of_letter(letters.front());
    for (std::size_t i = 1; i < letters.size(); ++i) acc = pp_compose(acc, ppmap_of_letter(letters[i]));
    return acc;
}

inline PPMap ppmap_from_word(const NormalWord& w) {
    auto letters = w.letters();
    return ppmap_from_letters(letters);
}

/// The four-piece element whose conjugate is the generator B.
inline PPMap build_d() {
    const ExtRational zero, inf = ExtRational::infinity(), ninf = ExtRational::neg_infinity();
    const ExtRational m1 = ExtRational::integer(-1);
    const ExtRational mhalf = ExtRational::reduced(-1, 2);
    return PPMap::from_pieces({{zero, inf, PSL2Matrix(1, 0, 0, 1)},
                               {ninf, m1, PSL2Matrix(1, -1, 0, 1)},
                               {m1, mhalf, PSL2Matrix(3, 1, -1, 0)},
                               {mhalf, zero, PSL2Matrix(1, 0, 1, 1)}});
}

/**
 * Inn_?(f) = ? o f o ?^-1.
 *
 * Descends the Stern-Brocot tree of the whole circle. A node interval is
 * kept once it avoids every breakpoint of f and its image is again a node
 * interval; on such a node f carries mediants to mediants, so the conjugate
 * is affine there.
 */
inline PLMap inn_question(const PPMap& f, std::size_t max_depth = 64) {
    struct Piece {
        Dyadic x;
        Dyadic y;     // image start in [0, 1)
        long ylog2;   // image length 2^ylog2
    };
    std::vector<Piece> out;
    std::vector<ExtRational> cuts;
    for (const auto& p : f.pieces()) cuts.push_back(p.lo);

    auto visit = [&](auto&& self, const BigInt& lp, const BigInt& lq, const BigInt& hp, const BigInt& hq,
                     const Dyadic& x, std::size_t depth) -> void {
        if (depth > max_depth) throw RefinementDepthError("Farey refinement exceeded depth " + std::to_string(max_depth));
        ExtRational lo = ExtRational::reduced(lp, lq), hi = ExtRational::reduced(hp, hq);
        bool split = std::any_of(cuts.begin(), cuts.end(), [&](const ExtRational& c) { return detail::strictly_inside(c, lo, hi); });
        if (!split) {
            const PSL2Matrix& m = f.piece_at(ExtRational::reduced(lp + hp, lq + hq)).mat;
            auto [ulp, ulq] = m.apply(lp, lq);
            auto [uhp, uhq] = m.apply(hp, hq);
            // Determinant is preserved, so the image is a Farey pair.
            assert(ulp * uhq - ulq * uhp == lp * hq - lq * hp);
            Dyadic ya = minkowski_q(ExtRational::reduced(ulp, ulq));
            Dyadic yb = minkowski_q_right(ExtRational::reduced(uhp, uhq));
            Dyadic len = yb - ya;
            auto e = len.log2_exact();
            if (e && ya.scaled(-*e).exp() == 0) {
                out.push_back({x, ya, *e});
                return;
            }
        }
        Dyadic half = Dyadic::pow2(-static_cast<long>(depth) - 1);
        BigInt mp = lp + hp, mq = lq + hq;
        self(self, lp, lq, mp, mq, x, depth + 1);
        self(self, mp, mq, hp, hq, x + half, depth + 1);
    };
    visit(visit, BigInt(0), BigInt(1), BigInt(1), BigInt(0), Dyadic(0), 1);
    visit(visit, BigInt(-1), BigInt(0), BigInt(0), BigInt(1), Dyadic(BigInt(1), 1), 1);

    std::vector<Breakpoint> breaks;
    Dyadic y = out.front().y;
    for (const auto& p : out) {
        if ((y - p.y).frac() != Dyadic(0)) throw DomainError("PP map is not a homeomorphism of the circle");
        breaks.push_back({p.x, y});
        y += Dyadic::pow2(p.ylog2);
    }
    breaks.push_back({Dyadic(1), y});
    return PLMap::from_breaks(std::move(breaks));
}

/// "lo..hi:[[a,b],[c,d]]; ..."
inline PPMap parse_ppmap(std::string_view text) {
    std::vector<PPPiece> pieces;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(';', start);
        if (end == std::string_view::npos) end = text.size();
        auto item = detail::trim(text.substr(start, end - start));
        auto dots = item.find("..");
        auto colon = item.find(':');
        if (dots == std::string_view::npos || colon == std::string_view::npos || colon < dots)
            throw ParseError("expected lo..hi:[[a,b],[c,d]], got '" + std::string(item) + "'");
        pieces.push_back({parse_ext_rational(item.substr(0, dots)),
                          parse_ext_rational(item.substr(dots + 2, colon - dots - 2)),
                          parse_matrix(item.substr(colon + 1))});
        start = end + 1;
    }
    try {
        return PPMap::from_pieces(std::move(pieces));
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid PP map: ") + e.what());
    }
}

} // namespace thompson
