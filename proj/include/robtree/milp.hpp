#pragma once

#include "robtree/core.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace robtree::milp {

enum class Sense { LessEqual, GreaterEqual, Equal };

struct Term {
    std::string variable;
    Rational coefficient;
};

struct Row {
    std::string name;
    std::vector<Term> terms;
    Sense sense = Sense::LessEqual;
    Rational rhs;
};

/// Minimize the continuous variable "C" subject to `rows`; every x_L_I is
/// binary. Coefficients stay exact here; only to_lp() rounds.
struct Model {
    Family family = Family::Bst;
    Metric metric = Metric::Worst;
    int num_keys = 0;
    int min_level = 1;  // 1 for BSTs, 0 for Huffman trees
    std::vector<std::string> binaries;
    std::vector<Row> rows;

    /// CPLEX-style LP text (Minimize / Subject To / Bounds / Binary / End).
    std::string to_lp() const;
    /// Every row holds under `values` (missing variables read as 0).
    bool satisfied_by(const std::map<std::string, Rational>& values) const;
    /// Rows whose name starts with `prefix`.
    std::size_t count_rows(std::string_view prefix) const;
};

inline constexpr const char* kCostVariable = "C";

/// "x_<level>_<key>" with a 1-based key.
std::string variable_name(int level, int key);

/// Assignment rows, pairwise level separation rows for i < j and every
/// level, and one cost row per scenario. Ratio rows are divided by the
/// scenario optimum; regret rows move it to the right-hand side.
/// Throws DomainError for the ratio metric when some optimum is 0.
Model build_bst_model(const ScenarioSet& scenarios, Metric metric);

/// Levels 0..n-1; the separation rows are replaced by the prefix Kraft
/// rows sum_{b<=l} 2^(l-b) sum_i x_b_i <= 2^l.
Model build_ht_model(const ScenarioSet& scenarios, Metric metric);

Model build_model(const ScenarioSet& scenarios, Family family, Metric metric);

std::string emit_bst_milp(const ScenarioSet& scenarios, Metric metric);
std::string emit_ht_milp(const ScenarioSet& scenarios, Metric metric);

/// Assignment x_L_I = 1 for the given tree, plus C.
std::map<std::string, Rational> assignment_for(std::span<const int> levels, Family family, const Rational& cost_value);

/// Decodes "name value" lines (blank lines and lines starting with '#' or
/// '\' skipped). Values must be within 1e-6 of 0 or 1. A BST solution that
/// only satisfies separation is returned as the depths of its Cartesian
/// tree, which are componentwise no larger. Throws ParseError for
/// fractional, missing or multiply-assigned keys; InvalidTreeError if the
/// decoded vector is not valid for the family.
std::vector<int> parse_solution(std::string_view text, int num_keys, Family family);

}  // namespace robtree::milp
