#include "thompson/harness.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace thompson;

TEST(Harness, CaretCounts) {
    const auto& g = generators();
    EXPECT_EQ(caret_count(TreePairDiagram()), 0u);
    EXPECT_EQ(caret_count(g.a), 1u);
    EXPECT_EQ(caret_count(g.b), 2u);
    EXPECT_EQ(caret_count(word_to_diagram(parse_word("bab"))), 3u);
}

TEST(Harness, WordEnumeration) {
    EXPECT_EQ(all_normal_words(0).size(), 2u);
    EXPECT_EQ(all_normal_words(1).size(), 8u);
    EXPECT_EQ(all_normal_words(3).size(), 32u);
    auto ws = all_normal_words(2);
    EXPECT_TRUE(std::is_sorted(ws.begin(), ws.end()));
    EXPECT_EQ(std::adjacent_find(ws.begin(), ws.end()), ws.end());
}

TEST(Harness, BreadthFirstLengths) {
    const auto& g = generators();
    EXPECT_EQ(bfs_length_ABC(TreePairDiagram(), 2), std::optional<std::size_t>(0));
    EXPECT_EQ(bfs_length_ABC(g.A, 2), std::optional<std::size_t>(1));
    EXPECT_EQ(bfs_length_ABC(g.a, 2), std::optional<std::size_t>(2));
    EXPECT_EQ(bfs_length_ABC(word_to_diagram(parse_word("babababab")), 1), std::nullopt);
    auto ball = abc_ball(2);
    EXPECT_EQ(ball.front().distance, 0u);
    for (std::size_t i = 1; i < ball.size(); ++i) EXPECT_LE(ball[i - 1].distance, ball[i].distance);
}

TEST(Harness, LengthRows) {
    auto rep = length_bounds_report(2);
    EXPECT_TRUE(rep.ok) << rep.failure;
    bool saw_bab = false, saw_abab = false;
    for (const auto& row : rep.rows) {
        if (row.word.str() == "bab") {
            saw_bab = true;
            EXPECT_EQ(row.len_ab, 3);
            EXPECT_EQ(row.carets, 3);
            EXPECT_EQ(row.leaves, 4);
        }
        if (row.word.str() == "abab") {
            saw_abab = true;
            EXPECT_EQ(row.len_ab, 4);
            EXPECT_EQ(row.carets, 3);
        }
    }
    EXPECT_TRUE(saw_bab);
    EXPECT_TRUE(saw_abab);
}

TEST(Harness, LengthBoundsAreTight) {
    auto rep = length_bounds_report(6);
    ASSERT_TRUE(rep.ok);
    // Both ends of 2N - 3 <= |w| <= 2N - 1 are reached.
    bool low = false, high = false;
    for (const auto& row : rep.rows) {
        low = low || row.len_ab == 2 * row.carets - 3;
        high = high || row.len_ab == 2 * row.carets - 1;
    }
    EXPECT_TRUE(low);
    EXPECT_TRUE(high);
}

TEST(Harness, FreeSubgroup) {
    auto rep = free_subgroup_report(3);
    EXPECT_TRUE(rep.ok) << rep.failure;
    EXPECT_EQ(rep.words_checked, 4u + 12u + 36u);
    EXPECT_EQ(rep.abel_g, std::make_pair(0, 2));
    EXPECT_EQ(rep.abel_h, std::make_pair(0, 1));
    EXPECT_EQ(concat(parse_word("abab"), parse_word("aBaB")).str(), "ababaBaB");
    EXPECT_EQ(rep.samples.front().first, "g");
    EXPECT_EQ(rep.samples.front().second, "abab");
}

TEST(Harness, SmallVerificationPassesAndIsDeterministic) {
    auto s1 = verify_all(2, 0);
    auto s2 = verify_all(2, 0);
    EXPECT_TRUE(s1.all_passed()) << s1.str();
    EXPECT_EQ(s1.str(), s2.str());
    EXPECT_EQ(s1.results.size(), 10u);
    EXPECT_TRUE(s1.results.back().skipped);
}

TEST(Harness, CorruptedRotationRuleIsCaught) {
    // Swapping the sign rule keeps four rotations per source, so a bare count
    // cannot see it. The word diagrams can.
    auto flipped = [](const ThinWeights& r, const ThinWeights& s, std::size_t rot) {
        return check_eq2_with(r, s, rot, [](int w) { return w == 1 ? 0 : 1; });
    };
    std::size_t rejected = 0;
    for (std::size_t k = 2; k <= 5; ++k) {
        EXPECT_EQ(count_members(k, flipped).members, std::size_t{4} << k);
        for (const auto& w : all_normal_words(k)) {
            auto d = word_to_diagram(w);
            auto r = weights_from_thin(d.source()), s = weights_from_thin(d.target());
            ASSERT_TRUE(check_eq2(r, s, d.rot()));
            rejected += !flipped(r, s, d.rot());
        }
    }
    EXPECT_GT(rejected, 0u);
}

TEST(Harness, RenderTree) {
    std::string dot = render_tree(generators().a);
    EXPECT_NE(dot.find("digraph source"), std::string::npos);
    EXPECT_NE(dot.find("digraph target"), std::string::npos);
    // a sends leaf 1 to target leaf 2, so the target reads 2, 1.
    auto t = dot.find("digraph target");
    auto first = dot.find("label=\"", dot.find("shape=box", t));
    EXPECT_EQ(dot.substr(first + 7, 1), "2");
    EXPECT_EQ(render_tree(TreePairDiagram()).find("->"), std::string::npos);
}
