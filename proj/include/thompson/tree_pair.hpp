#pragma once

/**
 * @file tree_pair.hpp
 * @brief Tree pair diagrams for Thompson's group T.
 *
 * A BinaryTree is stored as its preorder bitstring: '1' for a caret, '0' for
 * a leaf. A "100" substring is exactly an exposed caret.
 *
 * A TreePairDiagram (source, rot, target) sends leaf i of the source (domain
 * partition) to leaf sigma(i) = rot + i - 1 (mod n) of the target (range
 * partition). Products compose left to right: d1 * d2 applies d1 first.
 */

#include "thompson/core.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thompson {

class BinaryTree {
public:
    /// Single leaf.
    BinaryTree() : bits_("0") {}

    explicit BinaryTree(std::string bits) : bits_(std::move(bits)) {
        if (!well_formed(bits_)) throw DomainError("not a preorder tree bitstring: '" + bits_ + "'");
    }

    static BinaryTree leaf() { return {}; }
    static BinaryTree caret(const BinaryTree& l, const BinaryTree& r) {
        return BinaryTree("1" + l.bits_ + r.bits_, Trusted{});
    }

    const std::string& bits() const { return bits_; }

    std::size_t leaf_count() const { return (bits_.size() + 1) / 2; }
    std::size_t caret_count() const { return bits_.size() / 2; }
    bool is_leaf() const { return bits_.size() == 1; }

    BinaryTree left() const {
        if (is_leaf()) throw DomainError("leaf has no children");
        return BinaryTree(bits_.substr(1, subtree_end(bits_, 1) - 1), Trusted{});
    }
    BinaryTree right() const {
        if (is_leaf()) throw DomainError("leaf has no children");
        auto mid = subtree_end(bits_, 1);
        return BinaryTree(bits_.substr(mid), Trusted{});
    }

    /// Depth of each leaf, left to right.
    std::vector<std::size_t> leaf_depths() const {
        std::vector<std::size_t> out;
        std::vector<std::size_t> stack;  // pending subtrees' depths
        stack.push_back(0);
        for (char ch : bits_) {
            std::size_t d = stack.back();
            stack.pop_back();
            if (ch == '1') {
                stack.push_back(d + 1);
                stack.push_back(d + 1);
            } else {
                out.push_back(d);
            }
        }
        return out;
    }

    /// 1-based indices of the left leaves of the exposed carets.
    std::vector<std::size_t> exposed_caret_left_leaves() const {
        std::vector<std::size_t> out;
        std::size_t leaves_before = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] == '0') {
                ++leaves_before;
            } else if (i + 2 < bits_.size() && bits_[i + 1] == '0' && bits_[i + 2] == '0') {
                out.push_back(leaves_before + 1);
            }
        }
        return out;
    }

    /// Collapses the exposed caret whose left leaf is the given 1-based leaf.
    BinaryTree collapse_caret(std::size_t left_leaf) const {
        std::size_t leaves_before = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            if (bits_[i] == '0') {
                ++leaves_before;
            } else if (leaves_before + 1 == left_leaf && i + 2 < bits_.size() && bits_[i + 1] == '0' && bits_[i + 2] == '0') {
                return BinaryTree(bits_.substr(0, i) + "0" + bits_.substr(i + 3), Trusted{});
            }
        }
        throw DomainError("no exposed caret at leaf " + std::to_string(left_leaf));
    }

    /// Replaces leaf i by repl[i].
    BinaryTree substitute_leaves(const std::vector<BinaryTree>& repl) const {
        if (repl.size() != leaf_count()) throw DomainError("substitution size mismatch");
        std::string out;
        std::size_t j = 0;
        for (char ch : bits_) {
            if (ch == '1') out.push_back('1');
            else out += repl[j++].bits_;
        }
        return BinaryTree(std::move(out), Trusted{});
    }

    /// Preorder tree whose leaves have the given depths; nullopt when the
    /// depths do not describe a full binary tree.
    static std::optional<BinaryTree> from_leaf_depths(const std::vector<std::size_t>& depths) {
        std::string out;
        std::size_t pos = 0;
        auto build = [&](auto&& self, std::size_t depth) -> bool {
            if (pos >= depths.size() || depths[pos] < depth) return false;
            if (depths[pos] == depth) {
                out.push_back('0');
                ++pos;
                return true;
            }
            out.push_back('1');
            return self(self, depth + 1) && self(self, depth + 1);
        };
        if (!build(build, 0) || pos != depths.size()) return std::nullopt;
        return BinaryTree(std::move(out), Trusted{});
    }

    friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
    friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;

    /// End (exclusive) of the subtree starting at pos.
    static std::size_t subtree_end(std::string_view bits, std::size_t pos) {
        std::size_t pending = 1;
        while (pending > 0) {
            if (bits[pos++] == '1') ++pending;
            else --pending;
        }
        return pos;
    }

private:
    struct Trusted {};
    BinaryTree(std::string bits, Trusted) : bits_(std::move(bits)) {}

    static bool well_formed(std::string_view bits) {
        std::size_t pending = 1;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (pending == 0) return false;
            if (bits[i] == '1') ++pending;
            else if (bits[i] == '0') --pending;
            else return false;
        }
        return pending == 0;
    }

    std::string bits_;
};

/// Least common expansion: the union of the two caret sets.
inline BinaryTree common_expansion(const BinaryTree& t1, const BinaryTree& t2) {
    if (t1.is_leaf()) return t2;
    if (t2.is_leaf()) return t1;
    return BinaryTree::caret(common_expansion(t1.left(), t2.left()), common_expansion(t1.right(), t2.right()));
}

/// For each leaf of `base`, the subtree of `expansion` hanging at that leaf.
inline std::vector<BinaryTree> leaf_expansions(const BinaryTree& base, const BinaryTree& expansion) {
    std::vector<BinaryTree> out;
    auto walk = [&](auto&& self, std::string_view b, std::string_view e) -> void {
        if (b[0] == '0') {
            out.emplace_back(std::string(e));
            return;
        }
        if (e[0] != '1') throw DomainError("tree is not an expansion of the base tree");
        auto bm = BinaryTree::subtree_end(b, 1);
        auto em = BinaryTree::subtree_end(e, 1);
        self(self, b.substr(1, bm - 1), e.substr(1, em - 1));
        self(self, b.substr(bm), e.substr(em));
    };
    walk(walk, base.bits(), expansion.bits());
    return out;
}

class TreePairDiagram {
public:
    TreePairDiagram() = default;

    TreePairDiagram(BinaryTree source, std::size_t rot, BinaryTree target)
        : source_(std::move(source)), target_(std::move(target)), rot_(rot) {
        if (source_.leaf_count() != target_.leaf_count())
            throw DomainError("source and target leaf counts differ");
        if (rot_ < 1 || rot_ > source_.leaf_count()) throw DomainError("rotation out of range");
    }

    TreePairDiagram(std::string_view source, std::size_t rot, std::string_view target)
        : TreePairDiagram(BinaryTree(std::string(source)), rot, BinaryTree(std::string(target))) {}

    static TreePairDiagram identity() { return {}; }

    const BinaryTree& source() const { return source_; }
    const BinaryTree& target() const { return target_; }
    std::size_t rot() const { return rot_; }
    std::size_t leaf_count() const { return source_.leaf_count(); }
    std::size_t caret_count() const { return source_.caret_count(); }

    /// sigma(i), 1-based.
    std::size_t sigma(std::size_t i) const { return (rot_ - 1 + i - 1) % leaf_count() + 1; }
    std::size_t sigma_inv(std::size_t j) const {
        auto n = leaf_count();
        return (j + n - rot_) % n + 1;
    }

    /// "<source-bits>:<rot>:<target-bits>"
    std::string str() const { return source_.bits() + ":" + std::to_string(rot_) + ":" + target_.bits(); }

    friend bool operator==(const TreePairDiagram&, const TreePairDiagram&) = default;
    friend auto operator<=>(const TreePairDiagram&, const TreePairDiagram&) = default;

private:
    BinaryTree source_;
    BinaryTree target_;
    std::size_t rot_ = 1;
};

namespace detail {

// Left leaf of a source exposed caret whose two leaves go, in order, onto an
// exposed caret of the target.
inline std::optional<std::size_t> reducible_caret(const TreePairDiagram& d) {
    const auto n = d.leaf_count();
    auto target_carets = d.target().exposed_caret_left_leaves();
    for (std::size_t i : d.source().exposed_caret_left_leaves()) {
        std::size_t j = d.sigma(i);
        if (j == n) continue;  // sigma(i+1) wraps to 1
        for (std::size_t t : target_carets)
            if (t == j) return i;
    }
    return std::nullopt;
}

} // namespace detail

inline bool is_reduced(const TreePairDiagram& d) { return !detail::reducible_caret(d).has_value(); }

inline TreePairDiagram reduce(TreePairDiagram d) {
    while (auto i = detail::reducible_caret(d)) {
        std::size_t j = d.sigma(*i);
        std::size_t rot = d.rot();
        if (*i != 1 && rot > j + 1) --rot;
        if (*i == 1) rot = j;
        d = TreePairDiagram(d.source().collapse_caret(*i), rot, d.target().collapse_caret(j));
    }
    return d;
}

inline TreePairDiagram invert(const TreePairDiagram& d) { return {d.target(), d.sigma_inv(1), d.source()}; }

/// d1 * d2: d1 is applied first. The result is reduced.
inline TreePairDiagram multiply(const TreePairDiagram& d1, const TreePairDiagram& d2) {
    BinaryTree mid = common_expansion(d1.target(), d2.source());
    const std::size_t n = mid.leaf_count();

    // Expand d1 so that its target becomes `mid`.
    auto s1 = leaf_expansions(d1.target(), mid);
    std::vector<BinaryTree> src_repl;
    for (std::size_t i = 1; i <= d1.leaf_count(); ++i) src_repl.push_back(s1[d1.sigma(i) - 1]);
    BinaryTree source = d1.source().substitute_leaves(src_repl);
    std::size_t rot1 = 1;
    for (std::size_t j = 1; j < d1.rot(); ++j) rot1 += s1[j - 1].leaf_count();

    // Expand d2 so that its source becomes `mid`.
    auto s2 = leaf_expansions(d2.source(), mid);
    std::vector<BinaryTree> tgt_repl;
    for (std::size_t j = 1; j <= d2.leaf_count(); ++j) tgt_repl.push_back(s2[d2.sigma_inv(j) - 1]);
    BinaryTree target = d2.target().substitute_leaves(tgt_repl);
    std::size_t rot2 = 1;
    for (std::size_t j = 1; j < d2.rot(); ++j) rot2 += s2[d2.sigma_inv(j) - 1].leaf_count();

    std::size_t rot = (rot1 - 1 + rot2 - 1) % n + 1;
    return reduce(TreePairDiagram(std::move(source), rot, std::move(target)));
}

/// Fixed generator diagrams. a and b generate PSL2(Z) inside T; A, B, C are
/// the classical generators of T with b = C and a = CA.
struct Generators {
    TreePairDiagram A{"10100", 1, "11000"};
    TreePairDiagram B{"1010100", 1, "1011000"};
    TreePairDiagram C{"10100", 3, "10100"};
    TreePairDiagram a{"100", 2, "100"};
    TreePairDiagram b{"10100", 3, "10100"};
};

inline const Generators& generators() {
    static const Generators g;
    return g;
}

// ---------------------------------------------------------------------------
// Text format

inline TreePairDiagram parse_diagram(std::string_view text) {
    auto s = detail::trim(text);
    auto c1 = s.find(':');
    auto c2 = c1 == std::string_view::npos ? c1 : s.find(':', c1 + 1);
    if (c2 == std::string_view::npos || s.find(':', c2 + 1) != std::string_view::npos)
        throw ParseError("expected <source>:<rot>:<target>, got '" + std::string(s) + "'");
    try {
        BigInt rot = detail::parse_integer(s.substr(c1 + 1, c2 - c1 - 1), "diagram rotation");
        if (rot < 1 || rot > 1'000'000'000) throw ParseError("rotation out of range in '" + std::string(s) + "'");
        return TreePairDiagram(s.substr(0, c1), static_cast<std::size_t>(rot), s.substr(c2 + 1));
    } catch (const DomainError& e) {
        throw ParseError(std::string(e.what()) + " in '" + std::string(s) + "'");
    }
}

/// All binary trees with n leaves, in lexicographic order of bitstrings.
inline std::vector<BinaryTree> all_trees(std::size_t leaves) {
    if (leaves == 0) return {};
    if (leaves == 1) return {BinaryTree()};
    std::vector<BinaryTree> out;
    for (std::size_t l = 1; l < leaves; ++l)
        for (const auto& left : all_trees(l))
            for (const auto& right : all_trees(leaves - l)) out.push_back(BinaryTree::caret(left, right));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace thompson
