#pragma once

/**
 * @file thin.hpp
 * @brief Thin trees, their weight vectors, and the tree-pair membership test
 * for PSL2(Z) inside T.
 *
 * A thin tree with k + 2 leaves has a chain of k + 1 carets. Walking down the
 * chain from the root, each non-root caret gets weight +1 when it hangs to
 * the left of its parent and -1 when it hangs to the right. Throughout this
 * file `weight_count` is k, which is two less than the number of leaves.
 */

#include "thompson/core.hpp"
#include "thompson/psl2z.hpp"
#include "thompson/tree_pair.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thompson {

using ThinWeights = std::vector<int>;

inline bool is_thin(const BinaryTree& t) {
    return t.caret_count() >= 1 && t.exposed_caret_left_leaves().size() == 1;
}

inline ThinWeights weights_from_thin(const BinaryTree& t) {
    if (!is_thin(t)) throw NotThinError("tree " + t.bits() + " is not thin");
    ThinWeights w;
    BinaryTree cur = t;
    while (cur.caret_count() > 1) {
        BinaryTree l = cur.left();
        if (l.is_leaf()) {
            w.push_back(-1);
            cur = cur.right();
        } else {
            w.push_back(+1);
            cur = std::move(l);
        }
    }
    return w;
}

inline BinaryTree thin_from_weights(const ThinWeights& w) {
    std::string bits = "100";
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (*it == 1) {
            bits = "1" + bits + "0";
        } else if (*it == -1) {
            bits = "10" + bits;
        } else {
            throw DomainError("weights must be +1 or -1");
        }
    }
    return BinaryTree(bits);
}

/// Index of the left leaf of the exposed caret.
inline std::size_t exposed_left_leaf(const ThinWeights& w) {
    std::size_t l = 1;
    for (int x : w)
        if (x == -1) ++l;
    return l;
}

namespace detail {

inline int eps(int weight) { return weight == 1 ? 1 : 0; }
inline int eps_inv(bool e) { return e ? 1 : -1; }

inline long mod_pos(long v, long m) {
    long r = v % m;
    return r <= 0 ? r + m : r;  // representative in [1, m]
}

} // namespace detail

inline bool check_eq1(const ThinWeights& r, const ThinWeights& s) {
    if (r.size() != s.size()) throw DomainError("weight vectors differ in length");
    const long k = static_cast<long>(r.size());
    if (k < 2) throw DomainError("the caret-sum equation needs at least two weights");
    long sum = 0;
    for (long i = 2; i <= k - 1; ++i) sum += r[i] * s[k + 1 - i];
    return sum == 2 - k;
}

/// Rotation congruence. `Eps` lets tests substitute a corrupted sign rule.
template <class Eps>
bool check_eq2_with(const ThinWeights& r, const ThinWeights& s, std::size_t rot, Eps eps) {
    if (r.size() != s.size() || r.size() < 2) throw DomainError("rotation equation needs two weight vectors of length >= 2");
    const long m = static_cast<long>(r.size()) + 2;
    long lhs = static_cast<long>(exposed_left_leaf(r)) + static_cast<long>(rot) + eps(s[0]);
    long rhs = (3 - s[1]) / 2;
    return detail::mod_pos(lhs, m) == detail::mod_pos(rhs, m);
}

inline bool check_eq2(const ThinWeights& r, const ThinWeights& s, std::size_t rot) {
    return check_eq2_with(r, s, rot, detail::eps);
}

/// Reduced diagrams with fewer than four leaves, with their words.
inline const std::array<std::pair<const char*, const char*>, 10>& small_diagram_table() {
    static const std::array<std::pair<const char*, const char*>, 10> table{{
        {"e", "0:1:0"},
        {"a", "100:2:100"},
        {"b", "10100:3:10100"},
        {"B", "10100:2:10100"},
        {"ab", "11000:1:10100"},
        {"aB", "11000:3:10100"},
        {"ba", "10100:2:11000"},
        {"Ba", "10100:1:11000"},
        {"aba", "11000:3:11000"},
        {"aBa", "11000:2:11000"},
    }};
    return table;
}

inline TreePairDiagram word_to_diagram(const NormalWord& w) {
    const std::size_t k = w.k();
    if (k < 2) {
        const std::string key = w.str();
        for (const auto& [word, diagram] : small_diagram_table())
            if (key == word) return parse_diagram(diagram);
        throw DomainError("no table entry for " + key);  // unreachable
    }
    const auto& d = w.deltas();
    ThinWeights r(k), s(k);
    r[0] = detail::eps_inv(w.eps1());
    s[0] = detail::eps_inv(w.eps2());
    for (std::size_t i = 1; i < k; ++i) {
        r[i] = d[i - 1];
        s[i] = -d[k - i];
    }
    long rot = (3 - s[1]) / 2 - detail::eps(s[0]) - static_cast<long>(exposed_left_leaf(r));
    return TreePairDiagram(thin_from_weights(r), static_cast<std::size_t>(detail::mod_pos(rot, static_cast<long>(k) + 2)),
                           thin_from_weights(s));
}

inline bool is_member(const TreePairDiagram& d) {
    if (!is_reduced(d)) throw NotReducedError();
    if (d.leaf_count() < 4) return true;
    if (!is_thin(d.source()) || !is_thin(d.target())) return false;
    auto r = weights_from_thin(d.source());
    auto s = weights_from_thin(d.target());
    return check_eq1(r, s) && check_eq2(r, s, d.rot());
}

inline std::optional<NormalWord> diagram_to_word(const TreePairDiagram& d) {
    if (d.leaf_count() < 4) {
        const std::string key = d.str();
        for (const auto& [word, diagram] : small_diagram_table())
            if (key == diagram) return parse_word(word);
        return std::nullopt;
    }
    if (!is_reduced(d) || !is_member(d)) return std::nullopt;
    auto r = weights_from_thin(d.source());
    auto s = weights_from_thin(d.target());
    std::vector<int> deltas(r.begin() + 1, r.end());
    deltas.push_back(-s[1]);
    return NormalWord(r[0] == 1, std::move(deltas), s[0] == 1);
}

} // namespace thompson
