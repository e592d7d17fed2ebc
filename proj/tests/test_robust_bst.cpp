#include "robtree/errors.hpp"
#include "robtree/optimal.hpp"
#include "robtree/robust_bst.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace robtree;
using namespace robtree::testing;

namespace {

std::vector<BstLevelVector> optima_of(const ScenarioSet& s) {
    std::vector<BstLevelVector> out;
    for (const auto& o : optimal_bsts(s)) out.push_back(o.levels);
    return out;
}

ScenarioSet three_key_instance() {
    return ScenarioSet({"1", "2", "3"}, {fv({"0", "1/4", "3/4"}), fv({"4/9", "2/9", "1/3"})});
}

}  // namespace

TEST(MinLevelIndex, Examples) {
    const std::vector<BstLevelVector> three{BstLevelVector({1, 2, 3}), BstLevelVector({2, 1, 2}),
                                            BstLevelVector({2, 3, 1})};
    EXPECT_EQ(MinLevelIndex(three).minima(), (std::vector<int>{1, 1, 1}));
    const std::vector<BstLevelVector> one{BstLevelVector({2, 1, 2})};
    EXPECT_EQ(MinLevelIndex(one).minima(), (std::vector<int>{2, 1, 2}));

    const std::vector<BstLevelVector> ex{BstLevelVector({3, 2, 1}), BstLevelVector({1, 3, 2})};
    const MinLevelIndex index(ex);
    EXPECT_EQ(index.minima(), (std::vector<int>{1, 2, 1}));
    EXPECT_EQ(index.positions(1), (std::vector<int>{0, 2}));
    EXPECT_EQ(index.positions(2), (std::vector<int>{1}));
    EXPECT_EQ(index.ranks(), (std::vector<int>{1, 1, 2}));
    EXPECT_EQ(index.range_min_with_ranks(0, 2), (RangeMin{1, 1, 2}));
    EXPECT_EQ(index.range_min_with_ranks(1, 1), (RangeMin{2, 1, 1}));
    EXPECT_EQ(index.range_min_with_ranks(1, 2), (RangeMin{1, 2, 2}));
    EXPECT_THROW(index.range_min_with_ranks(2, 1), DomainError);
    EXPECT_THROW(index.range_min_with_ranks(0, 3), DomainError);
}

TEST(MinLevelIndex, RejectsBadInput) {
    EXPECT_THROW(MinLevelIndex(std::vector<BstLevelVector>{}), EmptyInputError);
    const std::vector<BstLevelVector> ragged{BstLevelVector({1}), BstLevelVector({1, 2})};
    EXPECT_THROW((MinLevelIndex(ragged)), DimensionError);
}

TEST(MinLevelIndex, RangeQueriesMatchScan) {
    Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        const int n = uniform_int(rng, 1, 25);
        const auto optima = optima_of(random_scenarios(rng, n, uniform_int(rng, 1, 5)));
        const MinLevelIndex index(optima);
        const auto& m = index.minima();
        for (int v = 1; v <= n; ++v) {
            const auto& p = index.positions(v);
            for (std::size_t r = 0; r < p.size(); ++r) {
                EXPECT_EQ(m[p[r]], v);
                EXPECT_EQ(index.ranks()[p[r]], static_cast<int>(r) + 1);
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                const int v = *std::min_element(m.begin() + i, m.begin() + j + 1);
                int first = 0, last = 0;
                for (int x = i; x <= j; ++x) {
                    if (m[x] != v) continue;
                    if (!first) first = index.ranks()[x];
                    last = index.ranks()[x];
                }
                EXPECT_EQ(index.range_min_with_ranks(i, j), (RangeMin{v, first, last}));
            }
        }
    }
}

TEST(RBst, ThreeKeyInstanceTrace) {
    const ScenarioSet s = three_key_instance();
    std::vector<RbstStep> trace;
    const auto l = r_bst_from_optimal(optima_of(s), RbstStrategy::SegmentTree, &trace);
    EXPECT_EQ(l, BstLevelVector({1, 3, 2}));
    ASSERT_EQ(trace.size(), 3u);
    EXPECT_EQ(trace[0], (RbstStep{0, 2, 1, 1, 2, 0}));
    EXPECT_EQ(trace[1], (RbstStep{1, 2, 2, 1, 1, 2}));
    EXPECT_EQ(trace[2], (RbstStep{1, 1, 3, 2, 1, 1}));
    const auto opt = per_scenario_optima(s, Family::Bst);
    const auto r = evaluate(l, s, opt);
    EXPECT_EQ(r.per_scenario_cost[0], Rational(9, 4));
    EXPECT_EQ(r.per_scenario_cost[1], Rational(16, 9));
    EXPECT_EQ(*r.competitive_ratio, Rational(9, 5));
}

TEST(RBst, UnitScenariosOnThreeKeys) {
    std::vector<FrequencyVector> unit;
    for (int s = 0; s < 3; ++s) {
        std::vector<Rational> w(3, 0);
        w[s] = 1;
        unit.emplace_back(w);
    }
    const ScenarioSet s = ScenarioSet::unlabeled(unit);
    const auto optima = optima_of(s);
    EXPECT_EQ(optima[0], BstLevelVector({1, 2, 3}));
    EXPECT_EQ(optima[1], BstLevelVector({2, 1, 2}));
    EXPECT_EQ(optima[2], BstLevelVector({2, 3, 1}));
    const auto l = r_bst(s);
    EXPECT_EQ(l, BstLevelVector({2, 1, 2}));
    EXPECT_EQ(*evaluate(l, s, per_scenario_optima(s, Family::Bst)).competitive_ratio, Rational(2));
}

TEST(RBst, SingleScenarioReproducesOptimum) {
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        const ScenarioSet s = random_scenarios(rng, uniform_int(rng, 1, 12), 1);
        EXPECT_EQ(r_bst(s), optimal_bst(s.scenario(0)).levels);
    }
}

TEST(RBst, PerKeyBoundAndStrategiesAgree) {
    Rng rng(17);
    for (int t = 0; t < 400; ++t) {
        const int n = uniform_int(rng, 1, 12);
        const int k = uniform_int(rng, 1, 8);
        const auto optima = optima_of(random_scenarios(rng, n, k));
        const int bound = r_bst_ratio_bound(optima.size());
        for (MedianTie tie : {MedianTie::Lower, MedianTie::Upper}) {
            std::vector<RbstStep> fast, naive;
            const auto l = r_bst_from_optimal(optima, RbstStrategy::SegmentTree, &fast, tie);
            const auto l2 = r_bst_from_optimal(optima, RbstStrategy::Naive, &naive, tie);
            EXPECT_EQ(l, l2);
            EXPECT_EQ(fast, naive);
            for (const auto& opt : optima) {
                for (int a = 0; a < n; ++a) EXPECT_LE(l[a], bound * opt[a]);
            }
        }
    }
}

TEST(RBst, DepthBetweenMinimumIncreases) {
    // Along every root-to-leaf path, the number of consecutive calls sharing
    // the same minimum level v is at most ceil(log2(k+1)).
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
        const int n = uniform_int(rng, 1, 14);
        const int k = uniform_int(rng, 1, 8);
        const auto optima = optima_of(random_scenarios(rng, n, k));
        std::vector<RbstStep> trace;
        r_bst_from_optimal(optima, RbstStrategy::SegmentTree, &trace);
        const int bound = r_bst_ratio_bound(optima.size());
        // Steps appear in pre-order; a step's parent is the nearest earlier
        // step whose range strictly contains it at level - 1.
        std::vector<int> run(trace.size(), 1);
        for (std::size_t x = 0; x < trace.size(); ++x) {
            for (std::size_t y = x; y-- > 0;) {
                if (trace[y].level == trace[x].level - 1 && trace[y].first <= trace[x].first &&
                    trace[x].last <= trace[y].last) {
                    EXPECT_GE(trace[x].min_level, trace[y].min_level);
                    if (trace[x].min_level == trace[y].min_level) run[x] = run[y] + 1;
                    break;
                }
            }
            EXPECT_LE(run[x], bound);
            EXPECT_LE(trace[x].level, bound * trace[x].min_level);
        }
    }
}

TEST(RBst, OutputsAreValidForLargeInputs) {
    Rng rng(41);
    const ScenarioSet s = random_scenarios(rng, 3000, 3);
    const auto l = r_bst(s, 3);
    EXPECT_TRUE(validate_bst_levels(l.levels()));
    std::vector<BstLevelVector> chain{BstLevelVector([] {
        std::vector<int> v(50000);
        for (int i = 0; i < 50000; ++i) v[i] = i + 1;
        return v;
    }())};
    EXPECT_EQ(r_bst_from_optimal(chain), chain[0]);
}

TEST(RBst, RatioBound) {
    EXPECT_EQ(r_bst_ratio_bound(1), 1);
    EXPECT_EQ(r_bst_ratio_bound(2), 2);
    EXPECT_EQ(r_bst_ratio_bound(3), 2);
    EXPECT_EQ(r_bst_ratio_bound(4), 3);
    EXPECT_EQ(r_bst_ratio_bound(7), 3);
    EXPECT_EQ(r_bst_ratio_bound(8), 4);
}
