#pragma once

#include "robtree/core.hpp"

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace robtree {

/// Key-to-group membership: bit i says whether key i belongs to group 0 or 1.
class ScenarioString {
public:
    ScenarioString() = default;
    /// Throws ParseError on any character other than '0' and '1'.
    explicit ScenarioString(std::string bits);

    const std::string& bits() const { return bits_; }
    std::size_t size() const { return bits_.size(); }
    int zeros() const { return zeros_; }
    int ones() const { return static_cast<int>(bits_.size()) - zeros_; }

private:
    std::string bits_;
    int zeros_ = 0;
};

/// Minimum total depth of a BST over m keys with unit weights:
/// (m+1)ceil(log2(m+1)) - 2^ceil(log2(m+1)) + 1.
long long opt_uniform(long long m);

/// Extra cost a group pays when a root splits its keys into m1 on the
/// left, m0 (0 or 1) at the root and m2 on the right. Throws DomainError if
/// m0 is not 0 or 1.
long long loss(long long m1, int m0, long long m2);

/// a * floor(log2(b+2)): an upper bound on the smallest 0-regret that
/// allows zero 1-regret.
long long alpha_star_bound(long long a, long long b);

struct RegretPoint {
    int alpha = 0;
    int beta = 0;
    BstLevelVector witness;
};

struct ParetoFront {
    std::vector<RegretPoint> points;  // alpha ascending, beta strictly descending
};

/// (0-regret, 1-regret) of a tree for the string.
std::pair<int, int> regret_point(const ScenarioString& s, std::span<const int> levels);

/// Dynamic program for f(s, alpha), the least 1-regret among BSTs whose
/// 0-regret is at most alpha. Tables are memoized by substring content, so
/// one solver reused across many strings shares work between them.
///
/// Each substring table runs from alpha = 0 up to the first alpha where the
/// 1-regret reaches 0; the search starts at the substring's own alpha*
/// bound and widens if that bound were ever insufficient, so values past the
/// end of a table equal its last entry exactly.
class FairnessSolver {
public:
    struct Result {
        int beta = 0;
        BstLevelVector witness;
    };

    Result min_regret(const ScenarioString& s, int alpha);
    ParetoFront pareto_front(const ScenarioString& s);
    /// Smallest alpha with f(s, alpha) = 0.
    int alpha_star(const ScenarioString& s);
    /// f(s, alpha) for alpha = 0 .. alpha_star(s).
    std::vector<int> regret_profile(const ScenarioString& s);

    std::size_t cached_tables() const { return tables_.size(); }

private:
    struct Table {
        std::vector<int> beta;       // f(sub, alpha)
        std::vector<int> root;       // chosen root offset per alpha
        std::vector<int> left_alpha; // alpha handed to the left subtree
    };

    const Table& table(std::string_view sub);
    Table build(std::string_view sub);
    BstLevelVector reconstruct(std::string_view s, int alpha);

    std::unordered_map<std::string, Table> tables_;
};

/// Single-query conveniences with a fresh solver.
FairnessSolver::Result min_regret(const ScenarioString& s, int alpha);
ParetoFront pareto_front(const ScenarioString& s);

}  // namespace robtree
