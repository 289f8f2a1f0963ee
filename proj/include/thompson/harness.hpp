#pragma once

/**
 * @file harness.hpp
 * @brief Enumeration sweeps, metric experiments, a breadth-first word-length
 * oracle in the generators A, B, C of T, and the verification driver.
 *
 * Every check here is exact and deterministic. Sweeps run single-threaded;
 * results are ordered by word or by diagram string.
 */

#include "thompson/circle_map.hpp"
#include "thompson/core.hpp"
#include "thompson/farey.hpp"
#include "thompson/psl2z.hpp"
#include "thompson/sequence.hpp"
#include "thompson/thin.hpp"
#include "thompson/tree_pair.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace thompson {

// ---------------------------------------------------------------------------
// Basic plumbing

inline std::size_t caret_count(const TreePairDiagram& d) { return d.caret_count(); }

inline TreePairDiagram letter_diagram(Letter l) {
    const auto& g = generators();
    switch (l) {
    case Letter::a: return g.a;
    case Letter::b: return g.b;
    case Letter::B: return invert(g.b);
    }
    return {};
}

/// Product of generator diagrams, letter by letter.
inline TreePairDiagram diagram_by_multiplication(std::span<const Letter> letters) {
    TreePairDiagram d;
    for (Letter l : letters) d = multiply(d, letter_diagram(l));
    return d;
}

inline TreePairDiagram diagram_by_multiplication(const NormalWord& w) {
    auto letters = w.letters();
    return diagram_by_multiplication(letters);
}

/// All normal words with exactly k exponents, in increasing order.
inline std::vector<NormalWord> all_normal_words(std::size_t k) {
    std::vector<NormalWord> out;
    if (k == 0) {
        out.emplace_back(false, std::vector<int>{}, false);
        out.emplace_back(true, std::vector<int>{}, false);
        return out;
    }
    for (int e1 = 0; e1 < 2; ++e1)
        for (int e2 = 0; e2 < 2; ++e2)
            for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
                std::vector<int> deltas(k);
                for (std::size_t i = 0; i < k; ++i) deltas[i] = (mask >> (k - 1 - i)) & 1 ? 1 : -1;
                out.emplace_back(e1 == 1, std::move(deltas), e2 == 1);
            }
    std::sort(out.begin(), out.end());
    return out;
}

/// All weight vectors of length k, lexicographic with -1 before +1.
inline std::vector<ThinWeights> all_weights(std::size_t k) {
    std::vector<ThinWeights> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        ThinWeights w(k);
        for (std::size_t i = 0; i < k; ++i) w[i] = (mask >> (k - 1 - i)) & 1 ? 1 : -1;
        out.push_back(std::move(w));
    }
    return out;
}

/// Every reduced diagram with exactly n leaves, ordered by text form.
inline std::vector<TreePairDiagram> all_reduced_diagrams(std::size_t n) {
    std::vector<TreePairDiagram> out;
    auto trees = all_trees(n);
    for (const auto& s : trees)
        for (const auto& t : trees)
            for (std::size_t r = 1; r <= n; ++r) {
                TreePairDiagram d(s, r, t);
                if (is_reduced(d)) out.push_back(std::move(d));
            }
    return out;
}

// ---------------------------------------------------------------------------
// Word length in {A, B, C} by breadth-first search

struct BallEntry {
    TreePairDiagram diagram;
    std::size_t distance;
};

/// The ball of the given radius around the identity in the Cayley graph of T
/// for A, B, C and their inverses, ordered by distance then by text form.
inline std::vector<BallEntry> abc_ball(std::size_t radius) {
    const auto& g = generators();
    const std::vector<TreePairDiagram> gens{g.A, invert(g.A), g.B, invert(g.B), g.C, invert(g.C)};
    std::map<std::string, std::size_t> seen;
    std::vector<BallEntry> out;
    std::vector<TreePairDiagram> frontier{TreePairDiagram()};
    seen.emplace(frontier.front().str(), 0);
    out.push_back({frontier.front(), 0});
    for (std::size_t dist = 1; dist <= radius; ++dist) {
        std::vector<TreePairDiagram> next;
        for (const auto& d : frontier)
            for (const auto& s : gens) {
                TreePairDiagram e = multiply(d, s);
                if (seen.emplace(e.str(), dist).second) next.push_back(std::move(e));
            }
        std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) { return x.str() < y.str(); });
        for (const auto& e : next) out.push_back({e, dist});
        frontier = std::move(next);
    }
    return out;
}

inline std::optional<std::size_t> bfs_length_ABC(const TreePairDiagram& d, std::size_t radius) {
    const TreePairDiagram target = reduce(d);
    for (const auto& e : abc_ball(radius))
        if (e.diagram == target) return e.distance;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Metric experiments

/// A non-negative fraction kept unreduced-safe via cross multiplication.
struct Ratio {
    long num = 0;
    long den = 1;
    friend bool operator<(const Ratio& x, const Ratio& y) { return x.num * y.den < y.num * x.den; }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

struct MetricRow {
    NormalWord word;
    long len_ab = 0;
    long carets = 0;
    long leaves = 0;
    std::optional<long> len_abc;
};

struct LengthBoundsReport {
    std::vector<MetricRow> rows;
    bool ok = true;
    std::string failure;
    Ratio min_ratio{1, 0};
    Ratio max_ratio{0, 1};
};

/**
 * Every non-identity word with at most max_k exponents, with the checks
 *   2N - 3 <= |w| <= 2N - 1,  (|w| + 1)/2 <= N <= (|w| + 3)/2,
 *   leaves = k + 2,  carets = k + 1,
 * where N counts carets. The identity has N = 0 and is left out.
 */
inline LengthBoundsReport length_bounds_report(std::size_t max_k, const std::vector<BallEntry>* ball = nullptr) {
    LengthBoundsReport rep;
    std::map<std::string, std::size_t> abc;
    if (ball)
        for (const auto& e : *ball) abc.emplace(e.diagram.str(), e.distance);
    for (std::size_t k = 0; k <= max_k; ++k) {
        for (const auto& w : all_normal_words(k)) {
            if (w.is_identity()) continue;
            TreePairDiagram d = word_to_diagram(w);
            MetricRow row{w, word_length_ab(w), static_cast<long>(caret_count(d)), static_cast<long>(d.leaf_count()), std::nullopt};
            if (auto it = abc.find(d.str()); it != abc.end()) row.len_abc = static_cast<long>(it->second);
            const long n = row.carets, len = row.len_ab, kk = static_cast<long>(k);
            bool good = 2 * n - 3 <= len && len <= 2 * n - 1 && len + 1 <= 2 * n && 2 * n <= len + 3 &&
                        row.leaves == kk + 2 && row.carets == kk + 1;
            if (!good && rep.ok) {
                rep.ok = false;
                rep.failure = "bound violated by " + w.str() + " (|w| = " + std::to_string(len) + ", N = " + std::to_string(n) + ")";
            }
            Ratio r{len, n};
            if (r < rep.min_ratio) rep.min_ratio = r;
            if (rep.max_ratio < r) rep.max_ratio = r;
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

struct FreeSubgroupReport {
    bool ok = true;
    std::string failure;
    std::size_t words_checked = 0;
    Ratio min_growth{1, 0};  // |image|_{a,b} / length
    std::pair<int, int> abel_g;
    std::pair<int, int> abel_h;
    std::vector<std::pair<std::string, std::string>> samples;  // first few words and images
};

/// Image of a word under a -> (1, 0), b -> (0, 1) in Z/2 x Z/3.
inline std::pair<int, int> abelianization(const NormalWord& w) {
    int a = 0, b = 0;
    for (Letter l : w.letters()) {
        if (l == Letter::a) a += 1;
        if (l == Letter::b) b += 1;
        if (l == Letter::B) b += 2;
    }
    return {a % 2, b % 3};
}

/**
 * Reduced words in g = abab, h = aBaB and their inverses. Each must have a
 * nontrivial image, and the image must be at least twice as long as the word.
 * Letters of the subgroup word: g, G = g^-1, h, H = h^-1.
 */
inline FreeSubgroupReport free_subgroup_report(std::size_t max_len) {
    FreeSubgroupReport rep;
    const NormalWord g = parse_word("abab"), h = parse_word("aBaB");
    const NormalWord gens[4] = {g, g.inverse(), h, h.inverse()};
    const char names[4] = {'g', 'G', 'h', 'H'};
    rep.abel_g = abelianization(g);
    rep.abel_h = abelianization(h);

    std::vector<int> word;
    auto visit = [&](auto&& self, const NormalWord& image) -> void {
        if (!word.empty()) {
            ++rep.words_checked;
            const long len = static_cast<long>(word.size());
            const long img = word_length_ab(image);
            std::string name;
            for (int x : word) name.push_back(names[x]);
            if (rep.samples.size() < 8) rep.samples.emplace_back(name, image.str());
            if (rep.ok && image.is_identity()) {
                rep.ok = false;
                rep.failure = name + " is trivial";
            } else if (rep.ok && img < 2 * len) {
                rep.ok = false;
                rep.failure = name + " has image " + image.str() + " shorter than twice its length";
            }
            Ratio r{img, len};
            if (r < rep.min_growth) rep.min_growth = r;
        }
        if (word.size() == max_len) return;
        for (int x = 0; x < 4; ++x) {
            if (!word.empty() && (word.back() ^ 1) == x) continue;  // x is the inverse of the last letter
            word.push_back(x);
            self(self, concat(image, gens[x]));
            word.pop_back();
        }
    };
    visit(visit, NormalWord());
    return rep;
}

// ---------------------------------------------------------------------------
// Counting sweeps

struct CountRow {
    std::size_t k = 0;
    std::size_t members = 0;
    bool four_per_source = true;
};

/// Counts (r, s, rot) triples with weight count k satisfying both equations,
/// with the rotation equation supplied by the caller.
template <class Eq2>
CountRow count_members(std::size_t k, Eq2 eq2) {
    CountRow row{k, 0, true};
    auto ws = all_weights(k);
    for (const auto& r : ws) {
        std::size_t per_source = 0;
        for (const auto& s : ws) {
            if (!check_eq1(r, s)) continue;
            for (std::size_t rot = 1; rot <= k + 2; ++rot)
                if (eq2(r, s, rot)) ++per_source;
        }
        row.members += per_source;
        if (per_source != 4) row.four_per_source = false;
    }
    return row;
}

inline CountRow count_members(std::size_t k) {
    return count_members(k, [](const ThinWeights& r, const ThinWeights& s, std::size_t rot) { return check_eq2(r, s, rot); });
}

// ---------------------------------------------------------------------------
// Verification driver

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

namespace criteria {

inline CriterionResult generator_relations() {
    CriterionResult res{1, "generator relations a^2 = b^3 = 1", true, false, ""};
    auto fail = [&](const std::string& why) {
        if (res.passed) res.detail = why;
        res.passed = false;
    };
    const PSL2Matrix ma = PSL2Matrix::gen_a(), mb = PSL2Matrix::gen_b();
    if (!matmul(ma, ma).is_identity()) fail("matrix a^2");
    if (!matmul(mb, matmul(mb, mb)).is_identity()) fail("matrix b^3");
    const auto& g = generators();
    if (!(multiply(g.a, g.a) == TreePairDiagram())) fail("diagram a^2");
    if (!(multiply(g.b, multiply(g.b, g.b)) == TreePairDiagram())) fail("diagram b^3");
    const PLMap pa = plmap_from_diagram(g.a), pb = plmap_from_diagram(g.b);
    if (!(pl_compose(pa, pa) == PLMap())) fail("PL map a^2");
    if (!(pl_compose(pb, pl_compose(pb, pb)) == PLMap())) fail("PL map b^3");
    const PPMap qa = ppmap_of_letter(Letter::a), qb = ppmap_of_letter(Letter::b);
    if (!pp_eq(pp_compose(qa, qa), PPMap())) fail("projective map a^2");
    if (!pp_eq(pp_compose(qb, pp_compose(qb, qb)), PPMap())) fail("projective map b^3");
    if (res.passed) res.detail = "matrix, diagram, PL and projective forms";
    return res;
}

inline CriterionResult question_mark_conjugation() {
    CriterionResult res{2, "conjugation by ? sends b to C, a to CA, d to B", true, false, ""};
    const auto& g = generators();
    const PLMap C = plmap_from_diagram(g.C), A = plmap_from_diagram(g.A), B = plmap_from_diagram(g.B);
    std::vector<std::string> bad;
    if (!(inn_question(ppmap_of_letter(Letter::b)) == C)) bad.push_back("b");
    if (!(inn_question(ppmap_of_letter(Letter::a)) == pl_compose(C, A))) bad.push_back("a");
    if (!(inn_question(build_d()) == B)) bad.push_back("d");
    if (!bad.empty()) {
        res.passed = false;
        for (const auto& b : bad) res.detail += (res.detail.empty() ? "mismatch for " : ", ") + b;
    } else {
        res.detail = "B = " + B.str();
    }
    return res;
}

/// Closed-form diagrams against the multiplication fold, plus the projective
/// route through ? against the PL map of the diagram.
inline CriterionResult word_diagram_oracle(std::size_t max_k, std::size_t conj_max_k) {
    CriterionResult res{3, "closed-form diagrams equal multiplication products", true, false, ""};
    std::size_t count = 0, conj = 0;
    for (std::size_t k = 2; k <= max_k && res.passed; ++k) {
        for (const auto& w : all_normal_words(k)) {
            ++count;
            TreePairDiagram d = word_to_diagram(w);
            if (!(d == diagram_by_multiplication(w))) {
                res.passed = false;
                res.detail = "mismatch at " + w.str();
                break;
            }
            auto back = diagram_to_word(d);
            if (!back || !(*back == w)) {
                res.passed = false;
                res.detail = "read-back mismatch at " + w.str();
                break;
            }
            if (k <= conj_max_k) {
                ++conj;
                if (!(inn_question(ppmap_from_word(w)) == plmap_from_diagram(d))) {
                    res.passed = false;
                    res.detail = "conjugation mismatch at " + w.str();
                    break;
                }
            }
        }
    }
    if (res.passed)
        res.detail = std::to_string(count) + " words, " + std::to_string(conj) + " also through the projective model";
    return res;
}

inline CriterionResult membership_counting(std::size_t max_k) {
    CriterionResult res{4, "membership counts 2^(k+2), 4 per source, 10 small diagrams", true, false, ""};
    std::string counts;
    for (std::size_t k = 2; k <= max_k; ++k) {
        CountRow row = count_members(k);
        counts += (counts.empty() ? "" : " ") + std::to_string(row.members);
        if (row.members != (std::size_t{1} << (k + 2)) || !row.four_per_source) {
            res.passed = false;
            res.detail = "k = " + std::to_string(k) + ": " + std::to_string(row.members) + " members";
            return res;
        }
    }
    std::vector<TreePairDiagram> small;
    for (std::size_t n = 1; n <= 3; ++n)
        for (auto& d : all_reduced_diagrams(n)) small.push_back(std::move(d));
    if (small.size() != 10) {
        res.passed = false;
        res.detail = std::to_string(small.size()) + " reduced diagrams with at most 3 leaves";
        return res;
    }
    for (const auto& d : small) {
        auto w = diagram_to_word(d);
        if (!is_member(d) || !w || !(diagram_by_multiplication(*w) == d)) {
            res.passed = false;
            res.detail = "small diagram " + d.str() + " does not match its word";
            return res;
        }
    }
    res.detail = "members per k: " + counts + "; 10 small diagrams";
    return res;
}

inline CriterionResult length_bounds(std::size_t max_k) {
    CriterionResult res{5, "length bounds 2N-3 <= |w| <= 2N-1", true, false, ""};
    auto rep = length_bounds_report(max_k);
    res.passed = rep.ok;
    res.detail = rep.ok ? std::to_string(rep.rows.size()) + " words, |w|/N from " + rep.min_ratio.str() + " to " + rep.max_ratio.str()
                        : rep.failure;
    return res;
}

/**
 * The two membership tests agree on: every word's diagram with at most
 * max_leaves leaves, every thin triple failing the equations, every diagram
 * in the {A, B, C} ball of the given radius, and every reduced diagram with
 * at most exhaustive_leaves leaves.
 */
inline CriterionResult characterization_agreement(std::size_t max_leaves, std::size_t ball_radius, std::size_t exhaustive_leaves) {
    CriterionResult res{6, "tree-pair and slope-sequence membership agree", true, false, ""};
    std::size_t members = 0, others = 0;
    auto check = [&](const TreePairDiagram& d, std::optional<bool> expect) {
        if (!res.passed) return;
        bool m1 = is_member(d);
        bool m2 = is_member_seq(plmap_from_diagram(d));
        if (m1 != m2 || (expect && *expect != m1)) {
            res.passed = false;
            res.detail = "disagreement at " + d.str();
        }
        (m1 ? members : others) += 1;
    };
    for (std::size_t k = 0; k + 2 <= max_leaves; ++k)
        for (const auto& w : all_normal_words(k)) check(word_to_diagram(w), true);
    for (std::size_t k = 2; k + 2 <= max_leaves; ++k) {
        auto ws = all_weights(k);
        for (const auto& r : ws)
            for (const auto& s : ws)
                for (std::size_t rot = 1; rot <= k + 2; ++rot) {
                    if (check_eq1(r, s) && check_eq2(r, s, rot)) continue;
                    TreePairDiagram d(thin_from_weights(r), rot, thin_from_weights(s));
                    if (is_reduced(d)) check(d, false);
                }
    }
    if (ball_radius > 0)
        for (const auto& e : abc_ball(ball_radius))
            if (e.diagram.leaf_count() <= max_leaves) check(e.diagram, std::nullopt);
    for (std::size_t n = 1; n <= exhaustive_leaves; ++n)
        for (const auto& d : all_reduced_diagrams(n)) check(d, std::nullopt);
    if (res.passed)
        res.detail = std::to_string(members) + " member and " + std::to_string(others) + " non-member checks";
    return res;
}

inline CriterionResult thin_sequences(std::size_t min_k, std::size_t max_k) {
    CriterionResult res{7, "thin sequences number 2^(k-2) and match thin trees", true, false, ""};
    std::string counts;
    for (std::size_t k = min_k; k <= max_k; ++k) {
        // Every candidate is a rearrangement of 2^-1, ..., 2^-(k-1), 2^-(k-1).
        std::vector<long> exps;
        for (std::size_t i = 1; i < k; ++i) exps.push_back(static_cast<long>(i));
        exps.push_back(static_cast<long>(k - 1));
        std::sort(exps.begin(), exps.end());
        std::set<std::string> seq_trees;
        std::size_t count = 0;
        do {
            std::vector<Dyadic> deltas;
            for (long e : exps) deltas.push_back(Dyadic::pow2(-e));
            if (!is_k_thin(deltas)) continue;
            ++count;
            BinaryTree t = thin_tree_from_sequence(deltas);
            if (sequence_from_thin_tree(t) != deltas) {
                res.passed = false;
                res.detail = "round trip fails at k = " + std::to_string(k);
                return res;
            }
            seq_trees.insert(t.bits());
        } while (std::next_permutation(exps.begin(), exps.end()));
        std::size_t trees = 0;
        for (const auto& w : all_weights(k - 2)) {
            BinaryTree t = thin_from_weights(w);
            ++trees;
            if (!(thin_tree_from_sequence(sequence_from_thin_tree(t)) == t) || !seq_trees.count(t.bits())) {
                res.passed = false;
                res.detail = "tree " + t.bits() + " does not round trip";
                return res;
            }
        }
        const std::size_t want = std::size_t{1} << (k - 2);
        counts += (counts.empty() ? "" : " ") + std::to_string(count);
        if (count != want || trees != want || seq_trees.size() != want) {
            res.passed = false;
            res.detail = "k = " + std::to_string(k) + ": " + std::to_string(count) + " thin sequences";
            return res;
        }
    }
    res.detail = "counts " + counts;
    return res;
}

inline CriterionResult question_mark(std::size_t max_exp) {
    CriterionResult res{8, "question mark: mediant law and inverse", true, false, ""};
    if (!(minkowski_q(ExtRational()) == Dyadic(0)) || !(minkowski_q(ExtRational::infinity()) == Dyadic::pow2(-1))) {
        res.passed = false;
        res.detail = "base values";
        return res;
    }
    std::size_t pairs = 0;
    // Stern-Brocot descent on both halves of the circle.
    auto descend = [&](auto&& self, const ExtRational& lo, const ExtRational& hi, const Dyadic& qlo, const Dyadic& qhi,
                       std::size_t depth) -> void {
        if (!res.passed || depth > max_exp) return;
        ExtRational m = mediant(lo, hi);
        ++pairs;
        if (!is_farey_pair(lo, hi) || !(minkowski_q(m) == (qlo + qhi).half())) {
            res.passed = false;
            res.detail = "mediant law fails between " + lo.str() + " and " + hi.str();
            return;
        }
        self(self, lo, m, qlo, minkowski_q(m), depth + 1);
        self(self, m, hi, minkowski_q(m), qhi, depth + 1);
    };
    descend(descend, ExtRational(), ExtRational::infinity(), Dyadic(0), Dyadic::pow2(-1), 2);
    descend(descend, ExtRational::neg_infinity(), ExtRational(), Dyadic::pow2(-1), Dyadic(1), 2);
    const BigInt n = BigInt(1) << max_exp;
    for (BigInt i = 0; i < n && res.passed; ++i) {
        Dyadic d(i, max_exp);
        if (!(minkowski_q(minkowski_inv(d)) == d)) {
            res.passed = false;
            res.detail = "inverse fails at " + d.str();
        }
    }
    if (res.passed) res.detail = std::to_string(pairs) + " mediants, " + n.str() + " dyadics";
    return res;
}

inline CriterionResult free_subgroup(std::size_t max_len) {
    CriterionResult res{9, "words in abab, aBaB are nontrivial and long", true, false, ""};
    auto rep = free_subgroup_report(max_len);
    res.passed = rep.ok;
    auto pr = [](std::pair<int, int> p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; };
    res.detail = rep.ok ? std::to_string(rep.words_checked) + " words, min growth " + rep.min_growth.str() + ", abelian images " +
                              pr(rep.abel_g) + " " + pr(rep.abel_h)
                        : rep.failure;
    return res;
}

inline CriterionResult abc_ball_bounds(std::size_t radius) {
    CriterionResult res{10, "ball bounds N <= 2|w|+1 and |w| <= 12N", true, false, ""};
    if (radius == 0) {
        res.skipped = true;
        res.detail = "radius 0";
        return res;
    }
    auto ball = abc_ball(radius);
    Ratio worst{0, 1};
    for (const auto& e : ball) {
        const long n = static_cast<long>(caret_count(e.diagram)), len = static_cast<long>(e.distance);
        if (n > 2 * len + 1 || len > 12 * n) {
            res.passed = false;
            res.detail = "violated by " + e.diagram.str();
            return res;
        }
        if (n > 0 && worst < Ratio{len, n}) worst = Ratio{len, n};
    }
    res.detail = std::to_string(ball.size()) + " elements, max |w|/N " + worst.str();
    return res;
}

} // namespace criteria

struct VerifySummary {
    std::vector<CriterionResult> results;
    bool all_passed() const {
        return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
    }
    std::string str() const {
        std::string out;
        for (const auto& r : results) {
            out += "criterion " + std::to_string(r.id) + ": " + (r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL")) + "  " + r.name;
            if (!r.detail.empty()) out += "  [" + r.detail + "]";
            out += "\n";
        }
        out += all_passed() ? "all criteria passed\n" : "verification FAILED\n";
        return out;
    }
};

/**
 * Runs every criterion at the given scale. max_k bounds the exponent count of
 * enumerated words; radius is the {A, B, C} ball radius (0 skips the ball).
 */
inline VerifySummary verify_all(std::size_t max_k, std::size_t radius) {
    VerifySummary s;
    s.results.push_back(criteria::generator_relations());
    s.results.push_back(criteria::question_mark_conjugation());
    s.results.push_back(criteria::word_diagram_oracle(max_k, max_k));
    s.results.push_back(criteria::membership_counting(std::min<std::size_t>(max_k, 7)));
    s.results.push_back(criteria::length_bounds(max_k));
    s.results.push_back(criteria::characterization_agreement(max_k + 2, radius > 0 ? radius - 1 : 0, std::min<std::size_t>(max_k + 2, 7)));
    s.results.push_back(criteria::thin_sequences(3, 10));
    s.results.push_back(criteria::question_mark(12));
    s.results.push_back(criteria::free_subgroup(5));
    s.results.push_back(criteria::abc_ball_bounds(radius));
    return s;
}

// ---------------------------------------------------------------------------
// Graph export

/// Two DOT digraphs. Source leaves are numbered 1..n; the target leaf that
/// receives source leaf i carries the label i.
inline std::string render_tree(const TreePairDiagram& d) {
    auto emit = [&](const std::string& name, const BinaryTree& t, const std::vector<std::size_t>& labels) {
        std::ostringstream os;
        os << "digraph " << name << " {\n  node [shape=circle, fontsize=10];\n";
        const std::string& bits = t.bits();
        std::size_t pos = 0, leaf = 0;
        auto walk = [&](auto&& self) -> std::size_t {
            std::size_t id = pos;
            char c = bits[pos++];
            if (c == '0') {
                os << "  n" << id << " [shape=box, label=\"" << labels[leaf++] << "\"];\n";
                return id;
            }
            os << "  n" << id << " [label=\"\", width=0.15];\n";
            std::size_t l = self(self);
            std::size_t r = self(self);
            os << "  n" << id << " -> n" << l << ";\n  n" << id << " -> n" << r << ";\n";
            return id;
        };
        walk(walk);
        os << "}\n";
        return os.str();
    };
    const std::size_t n = d.leaf_count();
    std::vector<std::size_t> src(n), tgt(n);
    for (std::size_t i = 1; i <= n; ++i) {
        src[i - 1] = i;
        tgt[d.sigma(i) - 1] = i;
    }
    return emit("source", d.source(), src) + emit("target", d.target(), tgt);
}

} // namespace thompson
