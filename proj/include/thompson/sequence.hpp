#pragma once

/**
 * @file sequence.hpp
 * @brief Slope sequences S(f) of circle maps and the membership test built
 * on them.
 *
 * S(f) lists, for each linear piece of f in domain order, the pair
 * (length of the image, length of the piece). One entry is marked: the piece
 * whose image starts at 0. Here `interval_count` is the number of entries,
 * which is the leaf count of the corresponding trees and not the weight count
 * used in thin.hpp.
 */

#include "thompson/circle_map.hpp"
#include "thompson/core.hpp"
#include "thompson/farey.hpp"
#include "thompson/thin.hpp"
#include "thompson/tree_pair.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

struct SeqS {
    std::vector<Dyadic> dx;
    std::vector<Dyadic> dy;
    std::size_t mark = 1;  // 1-based

    std::size_t interval_count() const { return dx.size(); }

    /// dy read cyclically from the marked entry.
    std::vector<Dyadic> dy_from_mark() const {
        std::vector<Dyadic> out(dy.begin() + static_cast<std::ptrdiff_t>(mark - 1), dy.end());
        out.insert(out.end(), dy.begin(), dy.begin() + static_cast<std::ptrdiff_t>(mark - 1));
        return out;
    }

    /// log2 of dy_i / dx_i for each entry.
    std::vector<long> slopes() const {
        std::vector<long> out;
        for (std::size_t i = 0; i < dx.size(); ++i) out.push_back(*PLMap::slope_log2(dx[i], dy[i]));
        return out;
    }

    friend bool operator==(const SeqS&, const SeqS&) = default;
};

inline SeqS seq_from_plmap(const PLMap& f) {
    std::vector<Dyadic> xs;
    for (const auto& b : f.breaks()) xs.push_back(b.x);
    xs.push_back(f.preimage(Dyadic(0)));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    // A single linear piece is split at the midpoint so S has two entries.
    if (xs.size() == 2) xs.insert(xs.begin() + 1, Dyadic(BigInt(1), 1));

    SeqS s;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        Dyadic y0 = f.eval_lift(xs[i]);
        if (y0.frac().is_zero()) s.mark = i + 1;
        s.dx.push_back(xs[i + 1] - xs[i]);
        s.dy.push_back(f.eval_lift(xs[i + 1]) - y0);
    }
    return s;
}

inline PLMap plmap_from_seq(const SeqS& s) {
    const std::size_t k = s.dx.size();
    if (k == 0 || s.dy.size() != k) throw DomainError("slope sequence needs matching non-empty dx and dy lists");
    if (s.mark < 1 || s.mark > k) throw DomainError("mark outside [1, k]");
    Dyadic before_mark(0);
    for (std::size_t i = 0; i + 1 < s.mark; ++i) before_mark += s.dy[i];
    std::vector<Breakpoint> breaks;
    Dyadic x(0), y = (Dyadic(1) - before_mark).frac();
    for (std::size_t i = 0; i < k; ++i) {
        breaks.push_back({x, y});
        x += s.dx[i];
        y += s.dy[i];
    }
    breaks.push_back({x, y});
    return PLMap::from_breaks(std::move(breaks));
}

/// `p[i-1]` is the image of i.
inline bool is_k_extremal(const std::vector<std::size_t>& p) {
    const std::size_t k = p.size();
    if (k < 2) return false;
    std::vector<bool> seen(k + 1, false);
    for (std::size_t v : p) {
        if (v < 1 || v > k || seen[v]) return false;
        seen[v] = true;
    }
    std::size_t lo = 1, hi = k;
    for (std::size_t i = 0; i + 2 < k; ++i) {
        if (p[i] == lo) {
            ++lo;
        } else if (p[i] == hi) {
            --hi;
        } else {
            return false;
        }
    }
    return p[k - 2] == lo && p[k - 1] == hi;
}

/// Returns the witnessing permutation (1-based images) when the sequence is
/// thin. The two copies of the smallest value are assigned in increasing
/// position, which is what extremality requires anyway.
inline std::optional<std::vector<std::size_t>> is_k_thin(const std::vector<Dyadic>& deltas) {
    const std::size_t k = deltas.size();
    if (k < 2) return std::nullopt;
    std::vector<std::size_t> p(k, 0);
    std::size_t smallest_seen = 0;
    for (std::size_t pos = 1; pos <= k; ++pos) {
        auto e = deltas[pos - 1].log2_exact();
        if (!e || *e > -1 || *e < -static_cast<long>(k - 1)) return std::nullopt;
        auto i = static_cast<std::size_t>(-*e);
        if (i == k - 1) {
            if (smallest_seen == 2) return std::nullopt;
            p[k - 2 + smallest_seen++] = pos;
        } else {
            if (p[i - 1] != 0) return std::nullopt;
            p[i - 1] = pos;
        }
    }
    if (smallest_seen != 2) return std::nullopt;
    if (!is_k_extremal(p)) return std::nullopt;
    return p;
}

inline BinaryTree thin_tree_from_sequence(const std::vector<Dyadic>& deltas) {
    auto p = is_k_thin(deltas);
    if (!p) throw NotThinError("sequence is not thin");
    const std::size_t k = deltas.size();
    ThinWeights w;
    // Entries placed after the two smallest ones are left turns.
    for (std::size_t i = 0; i + 2 < k; ++i) w.push_back((*p)[i] > (*p)[k - 1] ? 1 : -1);
    return thin_from_weights(w);
}

inline std::vector<Dyadic> sequence_from_thin_tree(const BinaryTree& t) {
    if (!is_thin(t)) throw NotThinError("tree " + t.bits() + " is not thin");
    std::vector<Dyadic> out;
    for (std::size_t d : t.leaf_depths()) out.push_back(Dyadic::pow2(-static_cast<long>(d)));
    return out;
}

namespace detail {

struct SmallGood {
    const char* word;
    std::array<long, 3> slopes;
    std::size_t length;
    std::size_t mark;
};

// The ten sequences with two or three entries that come from PSL2(Z).
inline const std::array<SmallGood, 10>& small_good_table() {
    static const std::array<SmallGood, 10> table{{
        {"e", {0, 0, 0}, 2, 1},
        {"a", {0, 0, 0}, 2, 2},
        {"Ba", {-1, 0, 1}, 3, 1},
        {"B", {-1, 0, 1}, 3, 3},
        {"ba", {-1, 1, 0}, 3, 3},
        {"b", {-1, 1, 0}, 3, 2},
        {"aba", {1, 0, -1}, 3, 2},
        {"ab", {1, 0, -1}, 3, 1},
        {"aBa", {0, 1, -1}, 3, 3},
        {"aB", {0, 1, -1}, 3, 2},
    }};
    return table;
}

} // namespace detail

/// Word label of a two- or three-entry sequence found in the small table.
inline std::optional<std::string> small_sequence_word(const SeqS& s) {
    const std::size_t k = s.interval_count();
    if (k < 2 || k > 3) return std::nullopt;
    auto sl = s.slopes();
    for (const auto& row : detail::small_good_table()) {
        if (row.length != k || row.mark != s.mark) continue;
        if (std::equal(sl.begin(), sl.end(), row.slopes.begin())) return std::string(row.word);
    }
    return std::nullopt;
}

/// The three listed conditions only: both length sequences thin, and the
/// slope pair 2^(j-k-1) / 2^-j present for 3 <= j <= k-2.
inline bool is_k_good_literal(const SeqS& s) {
    const std::size_t k = s.interval_count();
    if (k < 2) return false;
    if (!is_k_thin(s.dx) || !is_k_thin(s.dy_from_mark())) return false;
    if (k <= 3) return small_sequence_word(s).has_value();
    const long kl = static_cast<long>(k);
    for (long j = 3; j <= kl - 2; ++j) {
        const Dyadic want_dy = Dyadic::pow2(j - kl - 1), want_dx = Dyadic::pow2(-j);
        bool found = false;
        for (std::size_t i = 0; i < k && !found; ++i) found = s.dy[i] == want_dy && s.dx[i] == want_dx;
        if (!found) return false;
    }
    return true;
}

/**
 * Placement of the mark around the two shortest pieces. Those pieces are
 * adjacent in a thin sequence; their images must have lengths 1/2 and 1/4,
 * and the image of 0 must sit at one of four spots:
 *
 *   o1/2, 1/4        1/2, o1/4        1/4, o1/2        1/4, 1/2, o...
 *
 * With four pieces nothing else rules out the wrong rotations, so the three
 * listed conditions alone accept elements such as B.
 */
inline bool has_mark_placement(const SeqS& s) {
    const std::size_t k = s.interval_count();
    auto p = is_k_thin(s.dx);
    if (k < 4 || !p) return k < 4;
    const std::size_t i = (*p)[k - 2] - 1, j = (*p)[k - 1] - 1;
    if (j != i + 1) return false;
    const Dyadic half = Dyadic::pow2(-1), quarter = Dyadic::pow2(-2);
    const std::size_t m = s.mark - 1, after = (j + 1) % k;
    if (s.dy[i] == half && s.dy[j] == quarter) return m == i || m == j;
    if (s.dy[i] == quarter && s.dy[j] == half) return m == j || m == after;
    return false;
}

inline bool is_k_good(const SeqS& s) { return is_k_good_literal(s) && has_mark_placement(s); }

inline bool is_member_seq(const PLMap& f) { return is_k_good(seq_from_plmap(f)); }

// ---------------------------------------------------------------------------
// Text format: "dy/dx" entries separated by commas, marked entry prefixed by
// 'o'. Each dyadic is written as 1, 2^e, m*2^e, or an integer.

namespace detail {

inline std::string seq_dyadic_str(const Dyadic& d) {
    if (d.exp() == 0) return d.num().str();
    std::string pow = "2^-" + std::to_string(d.exp());
    return d.num() == 1 ? pow : d.num().str() + "*" + pow;
}

inline Dyadic parse_seq_dyadic(std::string_view text) {
    auto s = trim(text);
    BigInt mult = 1;
    if (auto star = s.find('*'); star != std::string_view::npos) {
        mult = parse_integer(s.substr(0, star), "slope sequence");
        s = s.substr(star + 1);
    }
    if (s.substr(0, 2) == "2^") {
        BigInt e = parse_integer(s.substr(2), "slope sequence exponent");
        if (e > 100000 || e < -100000) throw ParseError("exponent out of range in '" + std::string(text) + "'");
        return Dyadic(mult, 0).scaled(static_cast<long>(e));
    }
    if (mult != 1) throw ParseError("expected m*2^e in '" + std::string(text) + "'");
    return Dyadic(parse_integer(s, "slope sequence"), 0);
}

inline std::string slope_str(long e) {
    return e >= 0 ? (BigInt(1) << e).str() + "/1" : "1/" + (BigInt(1) << -e).str();
}

} // namespace detail

inline std::string seq_str(const SeqS& s) {
    std::string out;
    for (std::size_t i = 0; i < s.dx.size(); ++i) {
        if (i) out += ",";
        if (i + 1 == s.mark) out += "o";
        out += detail::seq_dyadic_str(s.dy[i]) + "/" + detail::seq_dyadic_str(s.dx[i]);
    }
    return out;
}

/// Slopes only, e.g. "1/2,o2/1,1/1".
inline std::string seq_slope_str(const SeqS& s) {
    std::string out;
    auto sl = s.slopes();
    for (std::size_t i = 0; i < sl.size(); ++i) {
        if (i) out += ",";
        if (i + 1 == s.mark) out += "o";
        out += detail::slope_str(sl[i]);
    }
    return out;
}

inline SeqS parse_seq(std::string_view text) {
    SeqS s;
    s.mark = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto item = detail::trim(text.substr(start, end - start));
        if (!item.empty() && item.front() == 'o') {
            if (s.mark != 0) throw ParseError("more than one marked entry");
            s.mark = s.dx.size() + 1;
            item.remove_prefix(1);
        }
        auto slash = item.find('/');
        if (slash == std::string_view::npos) throw ParseError("expected dy/dx, got '" + std::string(item) + "'");
        s.dy.push_back(detail::parse_seq_dyadic(item.substr(0, slash)));
        s.dx.push_back(detail::parse_seq_dyadic(item.substr(slash + 1)));
        start = end + 1;
    }
    if (s.mark == 0) throw ParseError("no marked entry");
    try {
        (void)plmap_from_seq(s);
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid slope sequence: ") + e.what());
    }
    return s;
}

} // namespace thompson
