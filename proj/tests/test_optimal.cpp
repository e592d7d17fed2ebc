#include "robtree/errors.hpp"
#include "robtree/optimal.hpp"
#include "robtree/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace robtree;
using namespace robtree::testing;

TEST(OptimalBst, ThreeKeyInstance) {
    const auto a = optimal_bst(fv({"0", "1/4", "3/4"}));
    EXPECT_EQ(a.cost, Rational(5, 4));
    EXPECT_EQ(a.levels, BstLevelVector({3, 2, 1}));
    const auto b = optimal_bst(fv({"4/9", "2/9", "1/3"}));
    EXPECT_EQ(b.cost, Rational(16, 9));
    // (1,3,2) and (2,1,2) tie; the smaller root wins.
    EXPECT_EQ(b.levels, BstLevelVector({1, 3, 2}));
}

TEST(OptimalBst, UniformThreeKeys) {
    const auto r = optimal_bst(fv({"1/3", "1/3", "1/3"}));
    EXPECT_EQ(r.cost, Rational(5, 3));
    EXPECT_EQ(r.levels, BstLevelVector({2, 1, 2}));
}

TEST(OptimalBst, SingleKeyAndZeros) {
    EXPECT_EQ(optimal_bst(fv({"1"})).levels, BstLevelVector({1}));
    const auto z = optimal_bst(fv({"0", "0", "0"}));
    EXPECT_EQ(z.cost, Rational(0));
    EXPECT_TRUE(validate_bst_levels(z.levels.levels()));
}

TEST(OptimalBst, MatchesReferenceAndOracle) {
    Rng rng(2024);
    for (int t = 0; t < 300; ++t) {
        const int n = uniform_int(rng, 1, 9);
        const FrequencyVector f = random_frequency(rng, n);
        const auto knuth = optimal_bst(f);
        const auto full = optimal_bst(f, BstDpMode::Unrestricted);
        EXPECT_EQ(knuth.cost, reference_bst_cost(f));
        EXPECT_EQ(knuth.cost, full.cost);
        EXPECT_EQ(bst_cost(knuth.levels, f), knuth.cost);
        EXPECT_EQ(bst_cost(full.levels, f), full.cost);
        if (n <= 7) {
            Rational best = -1;
            oracle::for_each_bst(n, [&](std::span<const int> l) {
                const Rational c = inner_cost(l, f);
                if (best < 0 || c < best) best = c;
                return true;
            });
            EXPECT_EQ(knuth.cost, best);
        }
    }
}

TEST(OptimalBst, ScalingInvariance) {
    Rng rng(7);
    for (int t = 0; t < 100; ++t) {
        const int n = uniform_int(rng, 1, 10);
        const FrequencyVector f = random_frequency(rng, n);
        const Rational c = make_rational(uniform_int(rng, 1, 30), uniform_int(rng, 1, 30));
        const auto a = optimal_bst(f);
        const auto b = optimal_bst(f.scaled(c));
        EXPECT_EQ(b.cost, c * a.cost);
        EXPECT_EQ(a.levels, b.levels);
    }
}

TEST(OptimalBst, HugeWeightsUseExactArithmetic) {
    Rng rng(12);
    const Rational huge = parse_rational("1000000000000000000000000000001/7");
    for (int t = 0; t < 40; ++t) {
        const int n = uniform_int(rng, 1, 9);
        const FrequencyVector f = random_frequency(rng, n).scaled(huge);
        const auto a = optimal_bst(f);
        EXPECT_EQ(a.cost, reference_bst_cost(f));
        EXPECT_EQ(a.cost, optimal_bst(f, BstDpMode::Unrestricted).cost);
        EXPECT_EQ(a.levels, optimal_bst(f.normalized()).levels);
    }
}

TEST(OptimalBst, LargeInputIsFast) {
    std::vector<Rational> w;
    for (int i = 0; i < 2000; ++i) w.push_back((i * 7919) % 101 + 1);
    const auto r = optimal_bst(FrequencyVector(std::move(w)));
    EXPECT_TRUE(validate_bst_levels(r.levels.levels()));
}

TEST(OptimalHuffman, Examples) {
    const auto a = optimal_huffman(fv({"1/2", "1/4", "1/4"}));
    EXPECT_EQ(a.lengths, HtLengthVector({1, 2, 2}));
    EXPECT_EQ(a.cost, Rational(3, 2));
    const auto b = optimal_huffman(fv({"1"}));
    EXPECT_EQ(b.lengths, HtLengthVector({0}));
    EXPECT_EQ(b.cost, Rational(0));
    const auto c = optimal_huffman(fv({"1/4", "1/4", "1/4", "1/4"}));
    EXPECT_EQ(c.lengths, HtLengthVector({2, 2, 2, 2}));
    EXPECT_EQ(c.cost, Rational(2));
}

TEST(OptimalHuffman, TieBreaksAreDeterministic) {
    EXPECT_EQ(optimal_huffman(fv({"1/2", "1/2", "0", "0"})).lengths, HtLengthVector({2, 1, 3, 3}));
    EXPECT_EQ(optimal_huffman(fv({"0", "0", "1/2", "1/2"})).lengths, HtLengthVector({3, 3, 2, 1}));
    EXPECT_EQ(optimal_huffman(fv({"1", "0", "0"})).lengths, HtLengthVector({1, 2, 2}));
    EXPECT_EQ(optimal_huffman(fv({"0", "1", "0"})).lengths, HtLengthVector({2, 1, 2}));
}

TEST(OptimalHuffman, MatchesReferenceAndOracle) {
    Rng rng(99);
    for (int t = 0; t < 300; ++t) {
        const int n = uniform_int(rng, 1, 9);
        const FrequencyVector f = random_frequency(rng, n);
        const auto h = optimal_huffman(f);
        EXPECT_EQ(h.cost, reference_huffman_cost(f));
        EXPECT_EQ(ht_cost(h.lengths, f), h.cost);
        EXPECT_EQ(kraft_sum(h.lengths.lengths()), Rational(1));
        if (n <= 7) {
            Rational best = -1;
            oracle::for_each_ht_length_vector(n, [&](std::span<const int> l) {
                const Rational c = inner_cost(l, f);
                if (best < 0 || c < best) best = c;
                return true;
            });
            EXPECT_EQ(h.cost, best);
        }
    }
}

TEST(CanonicalCodewords, PrefixFreeAndOrdered) {
    const auto c = canonical_codewords(std::vector<int>{2, 1, 3, 3});
    EXPECT_EQ(c, (std::vector<std::string>{"10", "0", "110", "111"}));
    EXPECT_EQ(canonical_codewords(std::vector<int>{0}), (std::vector<std::string>{""}));
    EXPECT_EQ(canonical_codewords(std::vector<int>{2, 2}), (std::vector<std::string>{"00", "01"}));
    EXPECT_THROW(canonical_codewords(std::vector<int>{1, 1, 1}), InvalidTreeError);
}

TEST(PerScenario, ParallelMatchesSequential) {
    Rng rng(5);
    const ScenarioSet s = random_scenarios(rng, 12, 9);
    const auto seq = per_scenario_optima(s, Family::Bst, 1);
    const auto par = per_scenario_optima(s, Family::Bst, 4);
    EXPECT_EQ(seq, par);
    EXPECT_EQ(per_scenario_optima(s, Family::Ht, 1), per_scenario_optima(s, Family::Ht, 3));
    for (std::size_t i = 0; i < s.num_scenarios(); ++i) EXPECT_EQ(seq[i], optimal_bst(s.scenario(i)).cost);
}
