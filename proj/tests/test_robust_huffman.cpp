#include "robtree/errors.hpp"
#include "robtree/optimal.hpp"
#include "robtree/robust_huffman.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace robtree;
using namespace robtree::testing;

namespace {

std::vector<HtLengthVector> optima_of(const ScenarioSet& s) {
    std::vector<HtLengthVector> out;
    for (const auto& o : optimal_huffmans(s)) out.push_back(o.lengths);
    return out;
}

std::vector<int> depths_of(std::vector<std::string> codes) { return CodeTree::from_codewords(codes).key_depths(); }

}  // namespace

TEST(CodeTree, CompactifyExamples) {
    const std::vector<std::string> codes{"00", "010", "10", "110"};
    const CodeTree t = CodeTree::from_codewords(codes);
    EXPECT_TRUE(t.has_unary_node());
    const CodeTree c = t.compactify();
    EXPECT_EQ(c.key_depths(), (std::vector<int>{2, 2, 2, 2}));
    EXPECT_FALSE(c.has_unary_node());
    EXPECT_EQ(c.compactify().key_depths(), c.key_depths());

    const std::vector<std::string> full{"0", "10", "11"};
    EXPECT_EQ(CodeTree::from_codewords(full).compactify().key_codewords(), full);
    const std::vector<std::string> lone{""};
    EXPECT_EQ(CodeTree::from_codewords(lone).compactify().key_depths(), (std::vector<int>{0}));
    const std::vector<std::string> chain{"01"};
    EXPECT_EQ(CodeTree::from_codewords(chain).compactify().key_depths(), (std::vector<int>{0}));
}

TEST(CodeTree, RejectsNonPrefixFree) {
    const std::vector<std::string> bad{"0", "01"};
    EXPECT_THROW(CodeTree::from_codewords(bad), InvalidTreeError);
    const std::vector<std::string> dup{"1", "1"};
    EXPECT_THROW(CodeTree::from_codewords(dup), InvalidTreeError);
    EXPECT_FALSE(is_prefix_free(bad));
    EXPECT_TRUE(is_prefix_free(std::vector<std::string>{"00", "01", "1"}));
}

TEST(CodeTree, CompactifyProperties) {
    Rng rng(8);
    for (int t = 0; t < 300; ++t) {
        // Random prefix-free code: leaves of a random tree, then drop some.
        const int n = uniform_int(rng, 1, 10);
        std::vector<std::string> codes{""};
        while (static_cast<int>(codes.size()) < n + 3) {
            const int pick = uniform_int(rng, 0, static_cast<int>(codes.size()) - 1);
            const std::string base = codes[pick];
            codes.erase(codes.begin() + pick);
            codes.push_back(base + "0");
            codes.push_back(base + "1");
        }
        std::shuffle(codes.begin(), codes.end(), rng);
        codes.resize(n);
        const CodeTree tree = CodeTree::from_codewords(codes);
        const auto before = tree.key_depths();
        const CodeTree c = tree.compactify();
        const auto after = c.key_depths();
        ASSERT_EQ(after.size(), before.size());
        for (int i = 0; i < n; ++i) EXPECT_LE(after[i], before[i]);
        EXPECT_FALSE(c.has_unary_node());
        EXPECT_TRUE(is_prefix_free(c.key_codewords()));
        EXPECT_TRUE(kraft_valid(after));
        if (n > 1) {
            EXPECT_EQ(kraft_sum(after), Rational(1));
        }
        EXPECT_EQ(c.compactify().key_codewords(), c.key_codewords());
    }
}

TEST(RHt, SingleScenarioIsOptimal) {
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        const ScenarioSet s = random_scenarios(rng, uniform_int(rng, 1, 10), 1);
        EXPECT_EQ(r_ht(s), optimal_huffman(s.scenario(0)).lengths);
    }
}

TEST(RHt, TwoDisjointScenarios) {
    const ScenarioSet s = ScenarioSet::unlabeled({fv({"1/2", "1/2", "0", "0"}), fv({"0", "0", "1/2", "1/2"})});
    const auto optima = optima_of(s);
    EXPECT_EQ(optima[0], HtLengthVector({2, 1, 3, 3}));
    EXPECT_EQ(optima[1], HtLengthVector({3, 3, 2, 1}));
    const RhtResult r = r_ht_detailed(s);
    EXPECT_EQ(r.pre_compaction_lengths, (std::vector<int>{3, 2, 3, 2}));
    EXPECT_EQ(r.pre_compaction_codewords, (std::vector<std::string>{"010", "00", "110", "10"}));
    EXPECT_EQ(r.source_scenario, (std::vector<int>{0, 0, 1, 1}));
    EXPECT_EQ(r.lengths, HtLengthVector({2, 2, 2, 2}));
    EXPECT_EQ(r.codewords, canonical_codewords(r.lengths.lengths()));
    EXPECT_EQ(evaluate(r.lengths, s, per_scenario_optima(s, Family::Ht)).regret, Rational(1, 2));
    EXPECT_EQ(r_ht(s, 1, RhtRoute::LevelByLevel), HtLengthVector({2, 2, 2, 2}));
}

TEST(RHt, DummyKeyInstance) {
    const ScenarioSet s = ScenarioSet::unlabeled({fv({"1", "0", "0"}), fv({"0", "1", "0"})});
    const HtLengthVector l = r_ht(s);
    EXPECT_EQ(l, HtLengthVector({2, 1, 2}));
    EXPECT_EQ(evaluate(l, s, per_scenario_optima(s, Family::Ht)).regret, Rational(1));
}

TEST(RHt, FastLengths) {
    const std::vector<HtLengthVector> in{HtLengthVector({1, 2, 3, 3}), HtLengthVector({3, 3, 1, 2})};
    EXPECT_EQ(r_ht_lengths_fast(in), HtLengthVector({2, 3, 2, 3}));
    const std::vector<HtLengthVector> single(4, HtLengthVector({0}));
    EXPECT_EQ(r_ht_lengths_fast(single), HtLengthVector({2}));
    EXPECT_EQ(build_and_compactify(r_ht_lengths_fast(single)), HtLengthVector({0}));
    const std::vector<HtLengthVector> one{HtLengthVector({1, 2, 2})};
    EXPECT_EQ(r_ht_lengths_fast(one), one[0]);
    EXPECT_THROW(r_ht_lengths_fast(std::vector<HtLengthVector>{}), EmptyInputError);
}

TEST(RHt, RoutesCanDisagreeAfterCompaction) {
    const ScenarioSet s = ScenarioSet::unlabeled({fv({"1/4", "1/4", "1/4", "1/4"}), fv({"1/8", "1/8", "1/4", "1/2"})});
    const auto optima = optima_of(s);
    EXPECT_EQ(optima[1], HtLengthVector({3, 3, 2, 1}));
    const RhtResult r = r_ht_detailed(s);
    EXPECT_EQ(r.pre_compaction_lengths, r_ht_lengths_fast(optima).lengths());
    EXPECT_EQ(r.lengths, HtLengthVector({3, 3, 2, 1}));
    EXPECT_EQ(r_ht(s, 1, RhtRoute::LevelByLevel), HtLengthVector({3, 3, 1, 2}));
}

TEST(RHt, RegretBoundAndPrefixFreedom) {
    Rng rng(1234);
    for (int t = 0; t < 500; ++t) {
        const int n = uniform_int(rng, 1, 8);
        const int k = uniform_int(rng, 1, 8);
        const ScenarioSet s = random_scenarios(rng, n, k);
        const auto optima = optima_of(s);
        const auto opt = per_scenario_optima(s, Family::Ht);
        const RhtResult r = r_ht_detailed(s);
        EXPECT_TRUE(is_prefix_free(r.pre_compaction_codewords));
        EXPECT_EQ(depths_of(r.pre_compaction_codewords), r.pre_compaction_lengths);
        EXPECT_EQ(r.pre_compaction_lengths, r_ht_lengths_fast(optima).lengths());
        for (int i = 0; i < n; ++i) EXPECT_LE(r.lengths[i], r.pre_compaction_lengths[i]);
        const int bound = r_ht_regret_bound(k);
        for (RhtRoute route : {RhtRoute::Codewords, RhtRoute::LevelByLevel}) {
            const HtLengthVector l = route == RhtRoute::Codewords ? r.lengths : r_ht(s, 1, route);
            EXPECT_TRUE(kraft_valid(l.lengths()));
            const auto report = evaluate(l, s, opt);
            EXPECT_LE(report.regret, Rational(bound));
            bool all_at_least_one = true;
            for (const auto& o : opt) all_at_least_one = all_at_least_one && o >= 1;
            if (all_at_least_one) {
                EXPECT_LE(*report.competitive_ratio, Rational(bound + 1));
            }
        }
    }
}

TEST(RHt, Helpers) {
    EXPECT_EQ(fixed_width_binary(5, 4), "0101");
    EXPECT_EQ(fixed_width_binary(0, 0), "");
    EXPECT_EQ(r_ht_regret_bound(1), 0);
    EXPECT_EQ(r_ht_regret_bound(2), 1);
    EXPECT_EQ(r_ht_regret_bound(3), 2);
    EXPECT_EQ(r_ht_regret_bound(8), 3);
    EXPECT_EQ(r_ht_regret_bound(9), 4);
}
