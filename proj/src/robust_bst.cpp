#include "robtree/robust_bst.hpp"

#include "robtree/errors.hpp"
#include "robtree/optimal.hpp"

#include <algorithm>
#include <tuple>

namespace robtree {

namespace {

RangeMin combine(const RangeMin& a, const RangeMin& b) {
    if (a.value == 0) return b;
    if (b.value == 0) return a;
    if (a.value < b.value) return a;
    if (b.value < a.value) return b;
    return RangeMin{a.value, a.first_rank, b.last_rank};
}

const std::vector<int> kNoPositions;

}  // namespace

MinLevelIndex::MinLevelIndex(std::span<const BstLevelVector> optimal_levels) {
    if (optimal_levels.empty()) throw EmptyInputError("need at least one scenario level vector");
    const std::size_t n = optimal_levels.front().size();
    for (const auto& l : optimal_levels) {
        if (l.size() != n) throw DimensionError("scenario level vectors differ in length");
    }
    minima_.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        int m = optimal_levels.front()[j];
        for (const auto& l : optimal_levels) m = std::min(m, l[j]);
        minima_[j] = m;
    }
    const int max_level = n == 0 ? 0 : *std::max_element(minima_.begin(), minima_.end());
    positions_.assign(static_cast<std::size_t>(max_level) + 1, {});
    ranks_.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        auto& p = positions_[minima_[j]];
        p.push_back(static_cast<int>(j));
        ranks_[j] = static_cast<int>(p.size());
    }
    // Iterative bottom-up segment tree; value 0 marks an empty slot.
    leaves_ = 1;
    while (leaves_ < n) leaves_ <<= 1;
    tree_.assign(2 * leaves_, RangeMin{});
    for (std::size_t j = 0; j < n; ++j) tree_[leaves_ + j] = RangeMin{minima_[j], ranks_[j], ranks_[j]};
    for (std::size_t v = leaves_ - 1; v >= 1; --v) tree_[v] = combine(tree_[2 * v], tree_[2 * v + 1]);
}

const std::vector<int>& MinLevelIndex::positions(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= positions_.size()) return kNoPositions;
    return positions_[v];
}

RangeMin MinLevelIndex::range_min_with_ranks(std::size_t i, std::size_t j) const {
    if (i > j) throw DomainError("range query with i > j");
    if (j >= minima_.size()) throw DomainError("range query past the last key");
    RangeMin left_acc{}, right_acc{};
    std::size_t lo = i + leaves_, hi = j + leaves_ + 1;
    while (lo < hi) {
        if (lo & 1) left_acc = combine(left_acc, tree_[lo++]);
        if (hi & 1) right_acc = combine(tree_[--hi], right_acc);
        lo >>= 1;
        hi >>= 1;
    }
    return combine(left_acc, right_acc);
}

namespace {

// Smallest (or largest) m in the sorted set whose left and right shares are
// both at most ceil((|S|-1)/2). Returns the 0-based position within the set.
std::size_t choose_median(std::size_t set_size, MedianTie tie) {
    const std::size_t bound = set_size / 2;  // ceil((c-1)/2) == floor(c/2)
    std::size_t pick = 0;
    for (std::size_t t = 0; t < set_size; ++t) {
        if (t <= bound && set_size - 1 - t <= bound) {
            pick = t;
            if (tie == MedianTie::Lower) break;
        }
    }
    return pick;
}

}  // namespace

BstLevelVector r_bst_from_optimal(std::span<const BstLevelVector> optimal_levels, RbstStrategy strategy,
                                  std::vector<RbstStep>* trace, MedianTie tie) {
    MinLevelIndex index(optimal_levels);
    const auto& minima = index.minima();
    const int n = static_cast<int>(index.size());
    std::vector<int> levels(n, 0);
    std::vector<std::tuple<int, int, int>> work{{0, n - 1, 1}};
    std::vector<int> scan;
    while (!work.empty()) {
        auto [i, j, level] = work.back();
        work.pop_back();
        if (i > j) continue;
        RbstStep step{i, j, level, 0, 0, 0};
        if (strategy == RbstStrategy::SegmentTree) {
            const RangeMin q = index.range_min_with_ranks(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            step.min_level = q.value;
            step.set_size = q.last_rank - q.first_rank + 1;
            // floor((s+e)/2)-th entry of P[v] (1-based), or the ceiling for
            // the upper median.
            const int sum = q.first_rank + q.last_rank + (tie == MedianTie::Upper ? 1 : 0);
            step.chosen = index.positions(q.value)[static_cast<std::size_t>(sum / 2 - 1)];
        } else {
            step.min_level = *std::min_element(minima.begin() + i, minima.begin() + j + 1);
            scan.clear();
            for (int r = i; r <= j; ++r) {
                if (minima[r] == step.min_level) scan.push_back(r);
            }
            step.set_size = static_cast<int>(scan.size());
            step.chosen = scan[choose_median(scan.size(), tie)];
        }
        levels[step.chosen] = level;
        if (trace) trace->push_back(step);
        // Right pushed first so the left subtree is processed first.
        work.emplace_back(step.chosen + 1, j, level + 1);
        work.emplace_back(i, step.chosen - 1, level + 1);
    }
    return BstLevelVector(std::move(levels));
}

BstLevelVector r_bst(const ScenarioSet& scenarios, unsigned jobs, MedianTie tie) {
    std::vector<BstLevelVector> optima;
    for (auto& o : optimal_bsts(scenarios, jobs)) optima.push_back(std::move(o.levels));
    return r_bst_from_optimal(optima, RbstStrategy::SegmentTree, nullptr, tie);
}

int r_bst_ratio_bound(std::size_t k) { return ceil_log2(static_cast<long long>(k) + 1); }

}  // namespace robtree
