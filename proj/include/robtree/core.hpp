#pragma once

#include "robtree/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace robtree {

/// Non-negative exact weights over n >= 1 ordered keys.
class FrequencyVector {
public:
    FrequencyVector() = default;
    explicit FrequencyVector(std::vector<Rational> weights);

    const std::vector<Rational>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    const Rational& operator[](std::size_t i) const { return weights_[i]; }

    Rational total() const;
    bool is_normalized() const { return total() == 1; }
    /// Same vector divided by its total. Throws DomainError if the total is 0.
    FrequencyVector normalized() const;
    FrequencyVector scaled(const Rational& factor) const;

    friend bool operator==(const FrequencyVector&, const FrequencyVector&) = default;

private:
    std::vector<Rational> weights_;
};

/// k frequency vectors over a shared, ordered key universe. Labels must be
/// distinct; their order is the key order.
class ScenarioSet {
public:
    ScenarioSet() = default;
    ScenarioSet(std::vector<std::string> key_labels, std::vector<FrequencyVector> scenarios,
                std::vector<std::string> scenario_names = {});

    /// Labels "1".."n" zero-padded so that they sort in key order.
    static ScenarioSet unlabeled(std::vector<FrequencyVector> scenarios);

    const std::vector<std::string>& key_labels() const { return key_labels_; }
    const std::vector<FrequencyVector>& scenarios() const { return scenarios_; }
    const std::vector<std::string>& scenario_names() const { return scenario_names_; }
    const FrequencyVector& scenario(std::size_t s) const { return scenarios_[s]; }
    std::size_t num_keys() const { return key_labels_.size(); }
    std::size_t num_scenarios() const { return scenarios_.size(); }

private:
    std::vector<std::string> key_labels_;
    std::vector<FrequencyVector> scenarios_;
    std::vector<std::string> scenario_names_;
};

/// Per-key depth of a binary search tree, root at level 1.
class BstLevelVector {
public:
    BstLevelVector() = default;
    /// Throws InvalidTreeError unless `levels` is the level vector of a BST.
    explicit BstLevelVector(std::vector<int> levels);

    const std::vector<int>& levels() const { return levels_; }
    std::size_t size() const { return levels_.size(); }
    int operator[](std::size_t i) const { return levels_[i]; }
    int height() const;

    friend bool operator==(const BstLevelVector&, const BstLevelVector&) = default;
    friend auto operator<=>(const BstLevelVector&, const BstLevelVector&) = default;

private:
    std::vector<int> levels_;
};

/// Per-key codeword length of a prefix-free code, root at level 0.
class HtLengthVector {
public:
    HtLengthVector() = default;
    /// Throws InvalidTreeError unless the lengths satisfy Kraft's inequality.
    explicit HtLengthVector(std::vector<int> lengths);

    const std::vector<int>& lengths() const { return lengths_; }
    std::size_t size() const { return lengths_.size(); }
    int operator[](std::size_t i) const { return lengths_[i]; }

    friend bool operator==(const HtLengthVector&, const HtLengthVector&) = default;
    friend auto operator<=>(const HtLengthVector&, const HtLengthVector&) = default;

private:
    std::vector<int> lengths_;
};

enum class Family { Bst, Ht };
enum class Metric { Worst, Ratio, Regret };

std::string to_string(Family family);
std::string to_string(Metric metric);
Family parse_family(const std::string& text);
Metric parse_metric(const std::string& text);

/// Reason a vector is not a BST level vector, or nullopt if it is one.
/// Throws EmptyInputError on an empty sequence.
std::optional<std::string> bst_levels_violation(std::span<const int> levels);

/// Only the separation half: equal levels are always split by a strictly
/// lower key in between. Vectors with gaps such as (3,1,3) pass.
bool satisfies_separation(std::span<const int> levels);

/// True iff `levels` is the level vector of some BST: two keys on the same
/// level are separated by a key on a lower level, and every non-root key
/// sits exactly one level below its parent. O(n) with two monotone stacks.
bool validate_bst_levels(std::span<const int> levels);

/// Σ 2^-L_i, exact.
Rational kraft_sum(std::span<const int> lengths);
bool kraft_valid(std::span<const int> lengths);

/// Σ L_i F_i. Throws DimensionError on a length mismatch.
Rational inner_cost(std::span<const int> levels, const FrequencyVector& freq);
Rational bst_cost(const BstLevelVector& levels, const FrequencyVector& freq);
Rational ht_cost(const HtLengthVector& lengths, const FrequencyVector& freq);

struct MetricReport {
    std::vector<Rational> per_scenario_cost;
    std::vector<Rational> per_scenario_opt;
    /// cost/opt per scenario; nullopt where the optimum is 0.
    std::vector<std::optional<Rational>> per_scenario_ratio;
    Rational worst_cost;
    /// Max over scenarios with a positive optimum; nullopt if there are none.
    std::optional<Rational> competitive_ratio;
    Rational regret;
    /// Set when at least one scenario was dropped from the ratio.
    bool zero_opt_warning = false;
};

MetricReport evaluate(std::span<const int> tree, const ScenarioSet& scenarios,
                      std::span<const Rational> per_scenario_opt);
MetricReport evaluate(const BstLevelVector& tree, const ScenarioSet& scenarios,
                      std::span<const Rational> per_scenario_opt);
MetricReport evaluate(const HtLengthVector& tree, const ScenarioSet& scenarios,
                      std::span<const Rational> per_scenario_opt);

/// The value of `metric` in a report. Ratio with no defined scenario throws
/// DomainError.
Rational metric_value(const MetricReport& report, Metric metric);

/// Explicit BST with 0-based key indices; -1 marks a missing child.
struct TreeShape {
    int root = -1;
    std::vector<int> left;
    std::vector<int> right;

    std::size_t size() const { return left.size(); }
    friend bool operator==(const TreeShape&, const TreeShape&) = default;
};

TreeShape levels_to_tree(const BstLevelVector& levels);
/// Throws InvalidTreeError if the shape is not a BST over keys 0..n-1.
BstLevelVector tree_to_levels(const TreeShape& tree);

/// Depth of the Cartesian tree (minimum level as root) of a vector that
/// only satisfies the separation property. Componentwise <= the input.
std::vector<int> cartesian_depths(std::span<const int> levels);

}  // namespace robtree
