#include "thompson/circle_map.hpp"
#include "thompson/harness.hpp"
#include "thompson/tree_pair.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace thompson;

namespace {

// Carets of a tree as root-to-node paths over {L, R}.
std::set<std::string> caret_paths(const std::string& bits) {
    std::set<std::string> out;
    std::size_t pos = 0;
    auto walk = [&](auto&& self, const std::string& path) -> void {
        if (bits[pos++] == '0') return;
        out.insert(path);
        self(self, path + "L");
        self(self, path + "R");
    };
    walk(walk, "");
    return out;
}

std::string tree_from_paths(const std::set<std::string>& carets, const std::string& path = "") {
    if (!carets.count(path)) return "0";
    return "1" + tree_from_paths(carets, path + "L") + tree_from_paths(carets, path + "R");
}

TreePairDiagram random_diagram(std::mt19937& rng, std::size_t max_leaves) {
    std::size_t n = 1 + rng() % max_leaves;
    auto trees = all_trees(n);
    return reduce(TreePairDiagram(trees[rng() % trees.size()], 1 + rng() % n, trees[rng() % trees.size()]));
}

} // namespace

TEST(BinaryTree, Validation) {
    EXPECT_NO_THROW(BinaryTree("10100"));
    EXPECT_THROW(BinaryTree("101"), DomainError);
    EXPECT_THROW(BinaryTree("1000"), DomainError);
    EXPECT_EQ(BinaryTree("1011000").leaf_depths(), (std::vector<std::size_t>{1, 3, 3, 2}));
    EXPECT_EQ(all_trees(4).size(), 5u);
    EXPECT_EQ(all_trees(6).size(), 42u);
}

TEST(BinaryTree, LeafDepthsRoundTrip) {
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& t : all_trees(n)) EXPECT_EQ(BinaryTree::from_leaf_depths(t.leaf_depths()), t);
    EXPECT_FALSE(BinaryTree::from_leaf_depths({1, 2}).has_value());
}

TEST(Reduced, Examples) {
    EXPECT_TRUE(is_reduced(TreePairDiagram()));
    EXPECT_FALSE(is_reduced(parse_diagram("100:1:100")));
    EXPECT_TRUE(is_reduced(parse_diagram("100:2:100")));
}

TEST(Reduce, Examples) {
    EXPECT_EQ(reduce(parse_diagram("100:1:100")), TreePairDiagram());
    auto a = generators().a;
    EXPECT_EQ(reduce(a), a);
    EXPECT_EQ(reduce(parse_diagram("11000:1:11000")), TreePairDiagram());
    // a with its first source leaf split, together with the target leaf it lands on.
    EXPECT_EQ(reduce(parse_diagram("11000:2:10100")), a);
    EXPECT_TRUE(is_reduced(parse_diagram("11000:3:10100")));
}

TEST(CommonExpansion, Examples) {
    BinaryTree t("1011000");
    EXPECT_EQ(common_expansion(t, t), t);
    EXPECT_EQ(common_expansion(BinaryTree("100"), BinaryTree("0")), BinaryTree("100"));
    EXPECT_EQ(common_expansion(BinaryTree("11000"), BinaryTree("10100")), BinaryTree("1100100"));
}

TEST(CommonExpansion, IsTheUnionOfCaretSets) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& s : all_trees(n))
            for (std::size_t m = 1; m <= 5; ++m)
                for (const auto& t : all_trees(m)) {
                    auto u = caret_paths(s.bits());
                    auto v = caret_paths(t.bits());
                    u.insert(v.begin(), v.end());
                    ASSERT_EQ(common_expansion(s, t).bits(), tree_from_paths(u));
                }
}

TEST(Multiply, GeneratorRelations) {
    const auto& g = generators();
    EXPECT_EQ(multiply(g.a, g.a), TreePairDiagram());
    EXPECT_EQ(multiply(g.b, multiply(g.b, g.b)), TreePairDiagram());
    EXPECT_EQ(multiply(TreePairDiagram(), g.B), g.B);
    EXPECT_EQ(multiply(g.C, g.A), g.a);
    EXPECT_EQ(g.b, g.C);
}

TEST(Multiply, HandComputedWords) {
    const auto& g = generators();
    auto B = invert(g.b);
    EXPECT_EQ(multiply(multiply(g.b, g.a), g.b).str(), "1011000:4:1010100");
    EXPECT_EQ(multiply(multiply(multiply(g.a, g.b), g.a), g.b).str(), "1110000:1:1010100");
    EXPECT_EQ(multiply(g.a, B).str(), "11000:3:10100");
}

TEST(Invert, Examples) {
    const auto& g = generators();
    EXPECT_EQ(invert(TreePairDiagram()), TreePairDiagram());
    EXPECT_EQ(invert(g.a), g.a);
    EXPECT_EQ(invert(g.b), multiply(g.b, g.b));
}

TEST(Generators, MatchTheirPiecewiseLinearForms) {
    const auto& g = generators();
    EXPECT_EQ(plmap_from_diagram(g.a).str(), "0,1/2; 1,3/2");
    EXPECT_EQ(plmap_from_diagram(g.b).str(), "0,3/4; 1/2,1; 3/4,3/2; 1,7/4");
    // A: x/2 on [0, 1/2], x - 1/4 on [1/2, 3/4], 2x - 1 on [3/4, 1].
    EXPECT_EQ(plmap_from_diagram(g.A).str(), "0,0; 1/2,1/4; 3/4,1/2; 1,1");
    // B fixes [0, 1/2] and acts like A on the right half.
    EXPECT_EQ(plmap_from_diagram(g.B).str(), "0,0; 1/2,1/2; 3/4,5/8; 7/8,3/4; 1,1");
}

TEST(Multiply, AgreesWithComposingPiecewiseLinearMaps) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 400; ++trial) {
        auto d1 = random_diagram(rng, 8), d2 = random_diagram(rng, 8);
        auto p = multiply(d1, d2);
        ASSERT_TRUE(is_reduced(p));
        ASSERT_EQ(plmap_from_diagram(p), pl_compose(plmap_from_diagram(d1), plmap_from_diagram(d2))) << d1.str() << " * " << d2.str();
        auto expanded = common_expansion(d1.target(), d2.source());
        EXPECT_LE(p.leaf_count(), expanded.leaf_count() + d1.leaf_count() + d2.leaf_count());
    }
}

TEST(GroupAxioms, RandomTriples) {
    std::mt19937 rng(22);
    const TreePairDiagram e;
    for (int trial = 0; trial < 200; ++trial) {
        auto x = random_diagram(rng, 8), y = random_diagram(rng, 8), z = random_diagram(rng, 8);
        ASSERT_EQ(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
        ASSERT_EQ(multiply(e, x), x);
        ASSERT_EQ(multiply(x, e), x);
        ASSERT_EQ(multiply(x, invert(x)), e);
        ASSERT_EQ(multiply(invert(x), x), e);
    }
}

TEST(GroupAxioms, InverseOnAllSmallDiagrams) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& d : all_reduced_diagrams(n)) ASSERT_EQ(multiply(d, invert(d)), TreePairDiagram()) << d.str();
}

TEST(Reduce, IdempotentAndPreservesTheMap) {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto trees = all_trees(n);
        for (const auto& s : trees)
            for (const auto& t : trees)
                for (std::size_t r = 1; r <= n; ++r) {
                    TreePairDiagram d(s, r, t);
                    auto rd = reduce(d);
                    ASSERT_TRUE(is_reduced(rd));
                    ASSERT_EQ(reduce(rd), rd);
                    ASSERT_EQ(plmap_from_diagram(rd), plmap_from_diagram(d));
                }
    }
}

TEST(Parse, Diagrams) {
    EXPECT_EQ(parse_diagram("10100:3:10100"), generators().b);
    EXPECT_THROW(parse_diagram("10100:4:10100"), ParseError);
    EXPECT_THROW(parse_diagram("10100:1:100"), ParseError);
    EXPECT_THROW(parse_diagram("10100:0:10100"), ParseError);
    EXPECT_THROW(parse_diagram("10100:1"), ParseError);
    EXPECT_THROW(parse_diagram("10200:1:10100"), ParseError);
}
