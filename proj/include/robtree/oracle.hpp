#pragma once

#include "robtree/core.hpp"
#include "robtree/fairness.hpp"

#include <functional>
#include <span>
#include <vector>

namespace robtree::oracle {

inline constexpr int kMaxBstKeys = 14;
inline constexpr int kMaxHtKeys = 10;

/// Return false from a visitor to stop the enumeration early.
using LevelVisitor = std::function<bool(std::span<const int>)>;

/// Streams all Catalan(n) BST level vectors, choosing every root of every
/// interval recursively. Memory is O(n). Throws LimitError outside 1..14.
void for_each_bst(int n, const LevelVisitor& visit);
std::vector<BstLevelVector> enumerate_bsts(int n);

/// Streams every Kraft-tight length vector on n keys exactly once: each
/// depth multiset of a full binary tree with n leaves, in all distinct
/// key assignments. Throws LimitError outside 1..10.
void for_each_ht_length_vector(int n, const LevelVisitor& visit);
std::vector<HtLengthVector> enumerate_ht_length_vectors(int n);

/// Every Kraft-valid (tight or slack) vector with entries in 0..max_length.
std::vector<std::vector<int>> enumerate_valid_length_vectors(int n, int max_length);

struct ExactResult {
    Rational value;
    std::vector<int> witness;  // first optimal tree in enumeration order
};

/// Exact robust optimum over the whole family. Scenario optima come from
/// optimal_bst / optimal_huffman. For the ratio, scenarios with a zero
/// optimum are skipped; if all are zero, DomainError.
ExactResult exact_robust(const ScenarioSet& scenarios, Family family, Metric metric);

/// Brute-force Pareto front: regret points of all BSTs, dominance filtered.
/// Throws LimitError for strings longer than 14.
ParetoFront exact_pareto(const ScenarioString& s);

}  // namespace robtree::oracle
