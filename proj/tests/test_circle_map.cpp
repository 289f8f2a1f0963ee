#include "thompson/circle_map.hpp"
#include "thompson/harness.hpp"
#include "thompson/thin.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace thompson;

namespace {

ExtRational q(long p, long d) { return ExtRational::canonical(p, d); }
Dyadic dy(long n, std::size_t e) { return Dyadic(BigInt(n), e); }

Letter random_letter(std::mt19937& rng) {
    static const Letter pool[3] = {Letter::a, Letter::b, Letter::B};
    return pool[rng() % 3];
}

} // namespace

TEST(PLMap, IdentityAndEvaluation) {
    PLMap id;
    EXPECT_EQ(id.str(), "0,0; 1,1");
    PLMap a = parse_plmap("0,1/2; 1,3/2");
    EXPECT_EQ(a(dy(1, 2)), dy(3, 2));
    EXPECT_EQ(a(dy(3, 2)), dy(1, 2));
    EXPECT_EQ(a.eval_lift(dy(3, 2)), dy(5, 2));
    EXPECT_EQ(a.preimage(Dyadic(0)), dy(1, 1));
}

TEST(PLMap, SlopesAndMergedBreakpoints) {
    PLMap f = parse_plmap("0,0; 1/4,1/4; 1/2,1/2; 3/4,5/8; 7/8,3/4; 1,1");
    EXPECT_EQ(f.piece_count(), 4u);
    EXPECT_EQ(f.slope(0), 0);
    EXPECT_EQ(f.slope(1), -1);
    EXPECT_EQ(f.slope(2), 0);
    EXPECT_EQ(f.slope(3), 1);
    EXPECT_EQ(PLMap::slope_log2(Dyadic(2), Dyadic(1)), std::optional<long>(-1));
    EXPECT_EQ(PLMap::slope_log2(dy(1, 3), dy(3, 2)), std::nullopt);
}

TEST(PLMap, RejectsMalformedInput) {
    EXPECT_THROW(parse_plmap("0,0; 1/2,1/3; 1,1"), ParseError);
    EXPECT_THROW(parse_plmap("0,0; 1/3,1/2; 1,1"), ParseError);
    EXPECT_THROW(PLMap::from_breaks({{Dyadic(0), Dyadic(0)}, {Dyadic(1), Dyadic(2)}}), DomainError);
    EXPECT_THROW(PLMap::from_breaks({{Dyadic(0), Dyadic(0)}, {dy(1, 1), dy(3, 2)}, {Dyadic(1), Dyadic(1)}}), DomainError);
    EXPECT_THROW(PLMap::from_breaks({{Dyadic(0), Dyadic(1)}, {Dyadic(1), Dyadic(2)}}), DomainError);
}

TEST(PLMap, ComposeAndInvert) {
    PLMap a = plmap_from_diagram(generators().a);
    PLMap b = plmap_from_diagram(generators().b);
    EXPECT_EQ(pl_compose(a, a), PLMap());
    EXPECT_EQ(pl_compose(b, pl_compose(b, b)), PLMap());
    EXPECT_EQ(pl_invert(b), pl_compose(b, b));
    EXPECT_TRUE(pl_eq(pl_compose(b, pl_invert(b)), PLMap()));
}

TEST(DiagramPLMap, RoundTripOnAllSmallDiagrams) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& d : all_reduced_diagrams(n)) ASSERT_EQ(diagram_from_plmap(plmap_from_diagram(d)), d) << d.str();
}

TEST(DiagramPLMap, RoundTripOnRandomLargerDiagrams) {
    std::mt19937 rng(31);
    for (std::size_t n : {7u, 8u, 10u}) {
        auto trees = all_trees(n);
        for (int trial = 0; trial < 150; ++trial) {
            auto d = reduce(TreePairDiagram(trees[rng() % trees.size()], 1 + rng() % n, trees[rng() % trees.size()]));
            ASSERT_EQ(diagram_from_plmap(plmap_from_diagram(d)), d) << d.str();
        }
    }
}

TEST(PPMap, LetterMapsAndPieceCounts) {
    EXPECT_EQ(ppmap_of_letter(Letter::a).pieces().size(), 2u);
    EXPECT_EQ(ppmap_of_letter(Letter::b).pieces().size(), 3u);
    EXPECT_EQ(pp_apply(ppmap_of_letter(Letter::a), q(2, 3)), q(-3, 2));
    EXPECT_TRUE(pp_apply(ppmap_of_letter(Letter::b), q(-1, 1)).is_infinite());
    EXPECT_EQ(pp_apply(ppmap_of_letter(Letter::B), q(1, 1)), q(-2, 1));
}

TEST(PPMap, CompositionFollowsWordOrder) {
    PPMap aa = pp_compose(ppmap_of_letter(Letter::a), ppmap_of_letter(Letter::a));
    EXPECT_TRUE(pp_eq(aa, PPMap()));
    PPMap bbb = ppmap_from_word(parse_word("bbb"));
    EXPECT_TRUE(pp_eq(bbb, PPMap()));
    PPMap ba = ppmap_from_word(parse_word("ba"));
    // b then a sends x to x + 1.
    EXPECT_EQ(pp_apply(ba, q(3, 4)), q(7, 4));
    EXPECT_EQ(pp_apply(ba, q(-1, 1)), q(0, 1));
}

TEST(PPMap, BuildDIsTheFourPieceMap) {
    PPMap d = build_d();
    EXPECT_EQ(d.pieces().size(), 4u);
    EXPECT_EQ(pp_apply(d, q(0, 1)), q(0, 1));
    EXPECT_EQ(pp_apply(d, q(5, 3)), q(5, 3));
    EXPECT_EQ(pp_apply(d, q(-1, 2)), q(-1, 1));
    EXPECT_EQ(pp_apply(d, q(-1, 1)), q(-2, 1));
    EXPECT_EQ(inn_question(d), plmap_from_diagram(generators().B));
}

TEST(QuestionMark, ConjugatesGeneratorsToDiagrams) {
    for (const auto& [word, diagram] : small_diagram_table()) {
        NormalWord w = parse_word(word);
        EXPECT_EQ(inn_question(ppmap_from_word(w)), plmap_from_diagram(parse_diagram(diagram))) << word;
    }
}

TEST(QuestionMark, IsAHomomorphism) {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Letter> u, v;
        for (std::size_t i = 0, n = rng() % 8; i < n; ++i) u.push_back(random_letter(rng));
        for (std::size_t i = 0, n = rng() % 8; i < n; ++i) v.push_back(random_letter(rng));
        PPMap f = ppmap_from_letters(u), g = ppmap_from_letters(v);
        ASSERT_EQ(inn_question(pp_compose(f, g)), pl_compose(inn_question(f), inn_question(g)));
    }
}

TEST(QuestionMark, DepthLimitIsReported) {
    PPMap f = ppmap_from_word(parse_word("babababababab"));
    EXPECT_THROW(inn_question(f, 3), RefinementDepthError);
    EXPECT_NO_THROW(inn_question(f));
}

TEST(Parse, PPMapRoundTrip) {
    for (const char* w : {"a", "b", "bab", "aBaBab"}) {
        PPMap f = ppmap_from_word(parse_word(w));
        EXPECT_TRUE(pp_eq(parse_ppmap(f.str()), f)) << f.str();
    }
    EXPECT_TRUE(pp_eq(parse_ppmap(build_d().str()), build_d()));
    EXPECT_THROW(parse_ppmap("0..1/0:[[1,0],[0,1]]"), ParseError);
}
