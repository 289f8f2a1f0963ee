#include "thompson/harness.hpp"
#include "thompson/sequence.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

using namespace thompson;

namespace {

std::vector<Dyadic> pows(std::initializer_list<long> exps) {
    std::vector<Dyadic> out;
    for (long e : exps) out.push_back(Dyadic::pow2(-e));
    return out;
}

SeqS seq_of_word(const char* w) { return seq_from_plmap(plmap_from_diagram(word_to_diagram(parse_word(w)))); }

} // namespace

TEST(Sequence, IdentityAndA) {
    SeqS e = seq_from_plmap(PLMap());
    EXPECT_EQ(seq_str(e), "o2^-1/2^-1,2^-1/2^-1");
    EXPECT_EQ(seq_slope_str(e), "o1/1,1/1");
    SeqS a = seq_of_word("a");
    EXPECT_EQ(seq_slope_str(a), "1/1,o1/1");
    EXPECT_TRUE(is_k_good(e));
    EXPECT_TRUE(is_k_good(a));
}

TEST(Sequence, GeneratorBSlopes) {
    SeqS b = seq_of_word("b");
    EXPECT_EQ(seq_slope_str(b), "1/2,o2/1,1/1");
    EXPECT_EQ(small_sequence_word(b), std::optional<std::string>("b"));
}

TEST(Extremal, Examples) {
    EXPECT_TRUE(is_k_extremal({1, 4, 2, 3}));
    EXPECT_TRUE(is_k_extremal({5, 1, 4, 2, 3}));
    EXPECT_FALSE(is_k_extremal({2, 1, 3}));
    EXPECT_FALSE(is_k_extremal({1, 2, 4, 3}));
    EXPECT_FALSE(is_k_extremal({1, 1}));
}

TEST(Thin, Examples) {
    // 1/2 at position 5, 1/4 at 1, 1/8 at 4, two copies of 1/16 at 2 and 3.
    auto p = is_k_thin(pows({2, 4, 4, 3, 1}));
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(*p, (std::vector<std::size_t>{5, 1, 4, 2, 3}));
    EXPECT_FALSE(is_k_thin(pows({1, 2, 3, 3, 4})).has_value());
    EXPECT_TRUE(is_k_thin(pows({1, 1})).has_value());
    EXPECT_FALSE(is_k_thin(pows({2, 2, 1, 1})).has_value());
}

TEST(Thin, TreeFromSequence) {
    BinaryTree t = thin_from_weights({1, -1, 1});
    EXPECT_EQ(t.bits(), "110110000");
    EXPECT_EQ(thin_tree_from_sequence(sequence_from_thin_tree(t)), t);
    EXPECT_THROW(thin_tree_from_sequence(pows({1, 2, 3, 3, 4})), NotThinError);
}

TEST(Thin, SequenceAndTreeAreInverse) {
    for (std::size_t k = 0; k <= 8; ++k)
        for (const auto& w : all_weights(k)) {
            BinaryTree t = thin_from_weights(w);
            auto seq = sequence_from_thin_tree(t);
            ASSERT_TRUE(is_k_thin(seq).has_value());
            ASSERT_EQ(thin_tree_from_sequence(seq), t);
        }
}

TEST(Good, SevenPieceExample) {
    SeqS s = seq_of_word("babaBabab");
    EXPECT_EQ(s.interval_count(), 7u);
    EXPECT_TRUE(is_k_good(s));
    EXPECT_EQ(seq_from_plmap(plmap_from_seq(s)), s);
}

TEST(Good, MarkPlacementRejectsGeneratorB) {
    SeqS s = seq_from_plmap(plmap_from_diagram(generators().B));
    EXPECT_EQ(s.interval_count(), 4u);
    EXPECT_TRUE(is_k_good_literal(s));
    EXPECT_FALSE(has_mark_placement(s));
    EXPECT_FALSE(is_k_good(s));
    EXPECT_FALSE(is_member_seq(plmap_from_diagram(generators().B)));
}

TEST(Good, ExactlyFourPerThinLengthSequence) {
    for (std::size_t k = 4; k <= 8; ++k) {
        std::map<std::string, std::size_t> per_dx;
        for (const auto& r : all_weights(k - 2)) per_dx[thin_from_weights(r).bits()] = 0;
        for (const auto& rd : all_weights(k - 2))
            for (const auto& rs : all_weights(k - 2)) {
                auto dx = sequence_from_thin_tree(thin_from_weights(rd));
                auto dy_marked = sequence_from_thin_tree(thin_from_weights(rs));
                for (std::size_t mark = 1; mark <= k; ++mark) {
                    SeqS s;
                    s.dx = dx;
                    s.mark = mark;
                    // dy read from the mark is dy_marked, so rotate it back.
                    s.dy = dy_marked;
                    std::rotate(s.dy.rbegin(), s.dy.rbegin() + static_cast<std::ptrdiff_t>(mark - 1), s.dy.rend());
                    if (is_k_good(s)) {
                        ++per_dx[thin_from_weights(rd).bits()];
                        ASSERT_EQ(seq_from_plmap(plmap_from_seq(s)), s) << seq_str(s);
                    }
                }
            }
        for (const auto& [tree, count] : per_dx) EXPECT_EQ(count, 4u) << "k = " << k << ", dx tree " << tree;
    }
}

TEST(Good, EveryWordGivesAGoodSequence) {
    for (std::size_t k = 0; k <= 7; ++k)
        for (const auto& w : all_normal_words(k)) {
            SeqS s = seq_from_plmap(plmap_from_diagram(word_to_diagram(w)));
            ASSERT_EQ(s.interval_count(), std::max<std::size_t>(k + 2, 2)) << w.str();
            ASSERT_TRUE(is_k_good(s)) << w.str() << " " << seq_str(s);
        }
}

TEST(Good, AgreesWithTreeTestOnSmallDiagrams) {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& d : all_reduced_diagrams(n))
            ASSERT_EQ(is_member_seq(plmap_from_diagram(d)), is_member(d)) << d.str();
}

TEST(Parse, Sequences) {
    SeqS s = parse_seq("o2^-1/2^-1,2^-1/2^-1");
    EXPECT_EQ(s, seq_from_plmap(PLMap()));
    SeqS b = seq_of_word("b");
    EXPECT_EQ(parse_seq(seq_str(b)), b);
    EXPECT_EQ(parse_seq("o3*2^-3/3*2^-2, 2^-1/2^-3, 2^-3/2^-3").dy[0], Dyadic(BigInt(3), 3));
    EXPECT_THROW(parse_seq("2^-1/2^-1,2^-1/2^-1"), ParseError);
    EXPECT_THROW(parse_seq("o2^-1/2^-1,o2^-1/2^-1"), ParseError);
    EXPECT_THROW(parse_seq("o1/2^-1,2^-1/2^-1"), ParseError);
    EXPECT_THROW(parse_seq("o2^-1"), ParseError);
}
