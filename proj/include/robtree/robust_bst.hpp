#pragma once

#include "robtree/core.hpp"

#include <span>
#include <vector>

namespace robtree {

/// Minimum level, with the 1-based ranks of its first and last occurrence
/// among all keys of that minimum value (counted from key 0).
struct RangeMin {
    int value = 0;
    int first_rank = 0;
    int last_rank = 0;

    friend bool operator==(const RangeMin&, const RangeMin&) = default;
};

/// Per-key minimum level over the scenario optima, plus a segment tree
/// answering range minimum queries with occurrence ranks in O(log n).
/// Key indices are 0-based.
class MinLevelIndex {
public:
    /// Throws DimensionError on ragged input, EmptyInputError on none.
    explicit MinLevelIndex(std::span<const BstLevelVector> optimal_levels);

    std::size_t size() const { return minima_.size(); }
    /// M[j] = min_s L^s_j.
    const std::vector<int>& minima() const { return minima_; }
    /// Q[j] = number of keys 0..j whose minimum equals M[j].
    const std::vector<int>& ranks() const { return ranks_; }
    /// P[v]: sorted keys j with M[j] == v; empty if v never occurs.
    const std::vector<int>& positions(int v) const;

    /// Range [i, j], inclusive. Throws DomainError if i > j or j >= n.
    RangeMin range_min_with_ranks(std::size_t i, std::size_t j) const;

private:
    std::vector<int> minima_;
    std::vector<int> ranks_;
    std::vector<std::vector<int>> positions_;
    std::vector<RangeMin> tree_;
    std::size_t leaves_ = 0;
};

enum class RbstStrategy { SegmentTree, Naive };

/// Which qualifying key wins when |S| is even: Lower takes the smaller of
/// the two middle keys, Upper the larger.
enum class MedianTie { Lower, Upper };

/// One call of the recursive placement procedure.
struct RbstStep {
    int first = 0;      // range [first, last] of keys, 0-based
    int last = 0;
    int level = 0;      // level assigned to the chosen key
    int min_level = 0;  // v: smallest scenario-optimal level in the range
    int set_size = 0;   // |S|: keys in the range attaining v
    int chosen = 0;     // m

    friend bool operator==(const RbstStep&, const RbstStep&) = default;
};

/// Builds the robust tree from per-scenario optimal level vectors. Among
/// keys of S whose left and right shares of S are both at most
/// ceil((|S|-1)/2), the smallest is chosen by default. Iterative; safe for
/// large n.
/// Steps are appended to `trace` in processing order (pre-order).
BstLevelVector r_bst_from_optimal(std::span<const BstLevelVector> optimal_levels,
                                  RbstStrategy strategy = RbstStrategy::SegmentTree,
                                  std::vector<RbstStep>* trace = nullptr,
                                  MedianTie tie = MedianTie::Lower);

/// Per-scenario optimal BSTs followed by the robust placement.
BstLevelVector r_bst(const ScenarioSet& scenarios, unsigned jobs = 1, MedianTie tie = MedianTie::Lower);

/// ceil(log2(k+1)), the worst-case competitive ratio of r_bst.
int r_bst_ratio_bound(std::size_t k);

}  // namespace robtree
