#pragma once

#include "robtree/core.hpp"

#include <string>
#include <vector>

namespace robtree {

enum class BstDpMode {
    KnuthRestricted,  // O(n^2), roots searched in [root(i,j-1), root(i+1,j)]
    Unrestricted,     // O(n^3), every root tried; for cross-checking ties
};

struct OptimalBst {
    BstLevelVector levels;
    Rational cost;
};

struct OptimalHuffman {
    HtLengthVector lengths;
    Rational cost;
};

/// Minimum-cost BST. Among optimal roots of a subrange the smallest key wins.
OptimalBst optimal_bst(const FrequencyVector& freq, BstDpMode mode = BstDpMode::KnuthRestricted);

/// Huffman code lengths. Merges pop by (weight, smallest contained key,
/// creation order); zero weights take part like any other.
OptimalHuffman optimal_huffman(const FrequencyVector& freq);

/// Canonical prefix-free codewords: keys sorted by (length, index) receive
/// lexicographically increasing codewords. Requires a Kraft-valid input.
std::vector<std::string> canonical_codewords(std::span<const int> lengths);

/// Per-scenario optima, computed on up to `jobs` threads.
std::vector<OptimalBst> optimal_bsts(const ScenarioSet& scenarios, unsigned jobs = 1);
std::vector<OptimalHuffman> optimal_huffmans(const ScenarioSet& scenarios, unsigned jobs = 1);

/// Per-scenario optimal costs for a family.
std::vector<Rational> per_scenario_optima(const ScenarioSet& scenarios, Family family, unsigned jobs = 1);

}  // namespace robtree
