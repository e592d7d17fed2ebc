#pragma once

#include "robtree/core.hpp"
#include "robtree/fairness.hpp"
#include "robtree/robust_bst.hpp"
#include "robtree/robust_huffman.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace robtree::data {

/// Directory holding the bundled snapshots (letter frequencies, cities).
std::filesystem::path default_data_dir();

/// CSV with header `key,<scenario names...>`; cells are decimals or
/// fractions such as "1/4". Lines starting with '#' are comments. Rows are
/// sorted by key, numerically when every key is an integer, and every
/// column is renormalized to sum to exactly 1.
/// Throws ParseError on malformed text, DomainError on a negative cell, a
/// duplicate key or a column summing to 0.
ScenarioSet parse_scenarios_csv(const std::string& text);
ScenarioSet load_scenarios_csv(const std::filesystem::path& path);

/// Inverse of parse_scenarios_csv, cells written as exact "p/q".
std::string scenarios_to_csv(const ScenarioSet& scenarios);

/// Letters a-z by language, each column normalized over the 26 letters.
struct LanguageFrequencyTable {
    ScenarioSet scenarios;
    std::vector<std::string> languages() const { return scenarios.scenario_names(); }
};

/// Throws DomainError unless the keys are exactly a..z.
LanguageFrequencyTable load_language_table(const std::filesystem::path& path);

/// Unit scenarios: for Bst, k keys with F^s = e_s; for Ht, k+1 keys where
/// the last key has weight 0 in every scenario.
ScenarioSet gen_adversarial(Family family, int k);

struct PartitionInstance {
    ScenarioSet scenarios;
    Rational threshold;          // V = W + sum(a)/2
    int ell = 0;                 // padded length m = 2^ell
    int m = 0;
    long long w = 0;             // smallest integer above (ell + 3/2) sum(a)
    Rational base_cost;          // W
    std::vector<long long> padded;
};

/// Two-scenario BST instance whose robust cost reaches the threshold iff
/// the numbers split into two halves of equal sum. Pads with zeros to a
/// power-of-two length; n = 3m - 1 keys.
PartitionInstance gen_partition_bst(const std::vector<long long>& a);

struct EcpInstance {
    ScenarioSet scenarios;
    Rational threshold;  // V = C1 + zM + D(2m+5)
    int half = 0;        // n: the list has 2n entries after padding, n = 2^m
    int m = 0;
    long long total_half = 0;  // D
    long long z = 0;
    long long big_m = 0;       // M, smallest integer above D(2m+5)
    long long c1 = 0;          // 10 z M
    long long c2 = 0;          // C1 + 2D(2m+5)
    std::vector<long long> padded;
};

/// Two-scenario Huffman instance over 3n+1 keys for equal-cardinality
/// partition. Keys are labelled u01.., uprime, v01.. Throws DomainError on
/// an odd sum, an odd count, an empty list or a negative entry.
EcpInstance gen_ecp_ht(const std::vector<long long>& a);

/// Takes the first n names of each list, sorts all 2n alphabetically and
/// marks each position with the list it came from. Throws DomainError if
/// a list is shorter than n.
ScenarioString gen_fairness_string(const std::vector<std::string>& names0, const std::vector<std::string>& names1,
                                   int n);

/// One name per line, '#' comments and blank lines skipped.
std::vector<std::string> load_name_list(const std::filesystem::path& path);

enum class RemarkMethod { Oracle, Dp };

/// True iff every string with a zeros and b ones has a BST with 0-regret
/// at most a and 1-regret at most b. The oracle is limited to a+b <= 14.
/// A shared solver lets repeated sweeps reuse substring tables.
bool check_remark1(int a, int b, RemarkMethod method, FairnessSolver* solver = nullptr);

struct MetricTriple {
    Rational cost;   // worst-case cost
    Rational ratio;  // competitive ratio
    Rational regret;
};

struct TargetCheck {
    std::string name;
    double computed = 0;
    double target = 0;
    double relative_error = 0;
    bool within_tolerance = false;
};

struct Table1Report {
    MetricTriple r_bst;
    MetricTriple r_ht;  // level-by-level route
    BstLevelVector r_bst_tree;
    /// The R-BST row with the upper-median tie rule, for comparison.
    MetricTriple r_bst_upper_median;
    BstLevelVector r_bst_upper_median_tree;
    HtLengthVector r_ht_tree;
    /// The same row from the codeword-concatenation route, for comparison.
    MetricTriple r_ht_codeword_route;
    HtLengthVector r_ht_codeword_route_tree;
    std::vector<TargetCheck> checks;  // 6 entries, R-BST then R-HT
    /// Solver-derived optimal values, keyed "bst-worst", "ht-ratio", ...
    std::map<std::string, Rational> optimal;
    std::vector<std::string> milp_files;
};

/// Published values for the two heuristic rows, and the tolerance used to
/// separate PASS from WARN.
inline constexpr double kTable1RelativeTolerance = 0.02;

struct Table1Options {
    /// Where to write the six MILP files; empty skips emission.
    std::filesystem::path milp_dir;
    /// Solver solution files keyed like Table1Report::optimal.
    std::map<std::string, std::filesystem::path> solutions;
    unsigned jobs = 1;
};

Table1Report run_table1(const LanguageFrequencyTable& table, const Table1Options& options = {});

}  // namespace robtree::data
