#include "robtree/core.hpp"

#include "robtree/errors.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace robtree {

FrequencyVector::FrequencyVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw EmptyInputError("frequency vector must have at least one key");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] < 0) {
            throw DomainError("negative frequency " + to_string(weights_[i]) + " at key " + std::to_string(i + 1));
        }
    }
}

Rational FrequencyVector::total() const {
    Rational sum = 0;
    for (const auto& w : weights_) sum += w;
    return sum;
}

FrequencyVector FrequencyVector::normalized() const {
    const Rational t = total();
    if (t == 0) throw DomainError("cannot normalize a frequency vector with zero total");
    return scaled(Rational(1) / t);
}

FrequencyVector FrequencyVector::scaled(const Rational& factor) const {
    if (factor < 0) throw DomainError("negative scaling factor");
    std::vector<Rational> out;
    out.reserve(weights_.size());
    for (const auto& w : weights_) out.push_back(w * factor);
    return FrequencyVector(std::move(out));
}

ScenarioSet::ScenarioSet(std::vector<std::string> key_labels, std::vector<FrequencyVector> scenarios,
                         std::vector<std::string> scenario_names)
    : key_labels_(std::move(key_labels)), scenarios_(std::move(scenarios)), scenario_names_(std::move(scenario_names)) {
    if (scenarios_.empty()) throw EmptyInputError("a scenario set needs at least one scenario");
    if (key_labels_.empty()) throw EmptyInputError("a scenario set needs at least one key");
    std::vector<std::string> sorted = key_labels_;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
        throw DomainError("duplicate key label '" + *dup + "'");
    }
    for (const auto& f : scenarios_) {
        if (f.size() != key_labels_.size()) {
            throw DimensionError("scenario has " + std::to_string(f.size()) + " weights for " +
                                 std::to_string(key_labels_.size()) + " keys");
        }
    }
    if (scenario_names_.empty()) {
        for (std::size_t s = 0; s < scenarios_.size(); ++s) scenario_names_.push_back("s" + std::to_string(s + 1));
    } else if (scenario_names_.size() != scenarios_.size()) {
        throw DimensionError("scenario name count does not match scenario count");
    }
}

ScenarioSet ScenarioSet::unlabeled(std::vector<FrequencyVector> scenarios) {
    if (scenarios.empty()) throw EmptyInputError("a scenario set needs at least one scenario");
    const std::size_t n = scenarios.front().size();
    const std::size_t width = std::to_string(n).size();
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) {
        std::string d = std::to_string(i);
        labels.push_back(std::string(width - d.size(), '0') + d);
    }
    return ScenarioSet(std::move(labels), std::move(scenarios));
}

BstLevelVector::BstLevelVector(std::vector<int> levels) : levels_(std::move(levels)) {
    if (auto why = bst_levels_violation(levels_)) throw InvalidTreeError(*why);
}

int BstLevelVector::height() const { return levels_.empty() ? 0 : *std::max_element(levels_.begin(), levels_.end()); }

HtLengthVector::HtLengthVector(std::vector<int> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.empty()) throw EmptyInputError("length vector must have at least one key");
    if (!kraft_valid(lengths_)) throw InvalidTreeError("length vector violates Kraft's inequality");
}

std::string to_string(Family family) { return family == Family::Bst ? "bst" : "ht"; }

std::string to_string(Metric metric) {
    switch (metric) {
        case Metric::Worst: return "worst";
        case Metric::Ratio: return "ratio";
        case Metric::Regret: return "regret";
    }
    return "?";
}

Family parse_family(const std::string& text) {
    if (text == "bst") return Family::Bst;
    if (text == "ht") return Family::Ht;
    throw ParseError("unknown tree family '" + text + "' (expected bst or ht)");
}

Metric parse_metric(const std::string& text) {
    if (text == "worst") return Metric::Worst;
    if (text == "ratio") return Metric::Ratio;
    if (text == "regret") return Metric::Regret;
    throw ParseError("unknown metric '" + text + "' (expected worst, ratio or regret)");
}

std::optional<std::string> bst_levels_violation(std::span<const int> levels) {
    if (levels.empty()) throw EmptyInputError("level vector is empty");
    const int n = static_cast<int>(levels.size());
    for (int i = 0; i < n; ++i) {
        if (levels[i] < 1) return "key " + std::to_string(i + 1) + " has non-positive level";
        if (levels[i] > n) return "key " + std::to_string(i + 1) + " has level above " + std::to_string(n);
    }
    // Nearest key to the left with a level <= ours; equality is a separation
    // violation, otherwise it is the nearest strictly lower key.
    std::vector<int> lower_left(n, -1), lower_right(n, -1);
    std::vector<int> stack;
    for (int j = 0; j < n; ++j) {
        while (!stack.empty() && levels[stack.back()] > levels[j]) stack.pop_back();
        if (!stack.empty() && levels[stack.back()] == levels[j]) {
            std::ostringstream msg;
            msg << "keys " << stack.back() + 1 << " and " << j + 1 << " share level " << levels[j]
                << " with no lower-level key between them (violates the separation rule)";
            return msg.str();
        }
        lower_left[j] = stack.empty() ? -1 : stack.back();
        stack.push_back(j);
    }
    stack.clear();
    for (int j = n - 1; j >= 0; --j) {
        while (!stack.empty() && levels[stack.back()] > levels[j]) stack.pop_back();
        lower_right[j] = stack.empty() ? -1 : stack.back();
        stack.push_back(j);
    }
    for (int j = 0; j < n; ++j) {
        const int l = lower_left[j] < 0 ? 0 : levels[lower_left[j]];
        const int r = lower_right[j] < 0 ? 0 : levels[lower_right[j]];
        if (levels[j] != std::max(l, r) + 1) {
            return "key " + std::to_string(j + 1) + " at level " + std::to_string(levels[j]) +
                   " is not one level below its parent (level " + std::to_string(std::max(l, r)) + ")";
        }
    }
    return std::nullopt;
}

bool satisfies_separation(std::span<const int> levels) {
    std::vector<int> stack;
    for (std::size_t j = 0; j < levels.size(); ++j) {
        while (!stack.empty() && levels[stack.back()] > levels[j]) stack.pop_back();
        if (!stack.empty() && levels[stack.back()] == levels[j]) return false;
        stack.push_back(static_cast<int>(j));
    }
    return true;
}

bool validate_bst_levels(std::span<const int> levels) { return !bst_levels_violation(levels).has_value(); }

Rational kraft_sum(std::span<const int> lengths) {
    if (lengths.empty()) return 0;
    const int max_len = *std::max_element(lengths.begin(), lengths.end());
    mpz_class numerator = 0;
    for (int l : lengths) {
        if (l < 0) throw DomainError("negative codeword length");
        mpz_class term;
        mpz_ui_pow_ui(term.get_mpz_t(), 2, static_cast<unsigned long>(max_len - l));
        numerator += term;
    }
    mpz_class denominator;
    mpz_ui_pow_ui(denominator.get_mpz_t(), 2, static_cast<unsigned long>(max_len));
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

bool kraft_valid(std::span<const int> lengths) {
    for (int l : lengths) {
        if (l < 0) return false;
    }
    return kraft_sum(lengths) <= 1;
}

Rational inner_cost(std::span<const int> levels, const FrequencyVector& freq) {
    if (levels.size() != freq.size()) {
        throw DimensionError("tree has " + std::to_string(levels.size()) + " keys but frequency vector has " +
                             std::to_string(freq.size()));
    }
    Rational cost = 0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (freq[i] != 0) cost += freq[i] * levels[i];
    }
    return cost;
}

Rational bst_cost(const BstLevelVector& levels, const FrequencyVector& freq) { return inner_cost(levels.levels(), freq); }

Rational ht_cost(const HtLengthVector& lengths, const FrequencyVector& freq) { return inner_cost(lengths.lengths(), freq); }

MetricReport evaluate(std::span<const int> tree, const ScenarioSet& scenarios, std::span<const Rational> per_scenario_opt) {
    if (per_scenario_opt.size() != scenarios.num_scenarios()) {
        throw DimensionError("expected one optimum per scenario");
    }
    MetricReport report;
    bool first = true;
    for (std::size_t s = 0; s < scenarios.num_scenarios(); ++s) {
        Rational cost = inner_cost(tree, scenarios.scenario(s));
        const Rational& opt = per_scenario_opt[s];
        Rational diff = cost - opt;
        if (first || cost > report.worst_cost) report.worst_cost = cost;
        if (first || diff > report.regret) report.regret = diff;
        first = false;
        if (opt > 0) {
            Rational ratio = cost / opt;
            if (!report.competitive_ratio || ratio > *report.competitive_ratio) report.competitive_ratio = ratio;
            report.per_scenario_ratio.emplace_back(std::move(ratio));
        } else {
            report.per_scenario_ratio.emplace_back(std::nullopt);
            report.zero_opt_warning = true;
        }
        report.per_scenario_cost.push_back(std::move(cost));
        report.per_scenario_opt.push_back(opt);
    }
    return report;
}

MetricReport evaluate(const BstLevelVector& tree, const ScenarioSet& scenarios, std::span<const Rational> per_scenario_opt) {
    return evaluate(std::span<const int>(tree.levels()), scenarios, per_scenario_opt);
}

MetricReport evaluate(const HtLengthVector& tree, const ScenarioSet& scenarios, std::span<const Rational> per_scenario_opt) {
    return evaluate(std::span<const int>(tree.lengths()), scenarios, per_scenario_opt);
}

Rational metric_value(const MetricReport& report, Metric metric) {
    switch (metric) {
        case Metric::Worst: return report.worst_cost;
        case Metric::Regret: return report.regret;
        case Metric::Ratio:
            if (!report.competitive_ratio) throw DomainError("competitive ratio undefined: every scenario optimum is 0");
            return *report.competitive_ratio;
    }
    return 0;
}

TreeShape levels_to_tree(const BstLevelVector& levels) {
    const int n = static_cast<int>(levels.size());
    TreeShape tree;
    tree.left.assign(n, -1);
    tree.right.assign(n, -1);
    // Cartesian tree on levels; the stack holds the right spine.
    std::vector<int> spine;
    for (int j = 0; j < n; ++j) {
        int last = -1;
        while (!spine.empty() && levels[spine.back()] > levels[j]) {
            last = spine.back();
            spine.pop_back();
        }
        tree.left[j] = last;
        if (!spine.empty()) tree.right[spine.back()] = j;
        spine.push_back(j);
    }
    tree.root = spine.empty() ? -1 : spine.front();
    return tree;
}

BstLevelVector tree_to_levels(const TreeShape& tree) {
    const int n = static_cast<int>(tree.size());
    if (n == 0) throw EmptyInputError("tree has no nodes");
    if (static_cast<int>(tree.right.size()) != n) throw InvalidTreeError("left/right child arrays differ in size");
    if (tree.root < 0 || tree.root >= n) throw InvalidTreeError("root index out of range");
    std::vector<int> levels(n, 0);
    std::vector<int> inorder;
    inorder.reserve(n);
    // Iterative in-order walk; a revisited node means a cycle or shared child.
    std::vector<std::pair<int, int>> stack;
    int node = tree.root;
    int depth = 1;
    while (node >= 0 || !stack.empty()) {
        while (node >= 0) {
            if (node >= n) throw InvalidTreeError("child index out of range");
            if (levels[node] != 0) throw InvalidTreeError("node " + std::to_string(node + 1) + " is reachable twice");
            levels[node] = depth;
            stack.emplace_back(node, depth);
            node = tree.left[node];
            ++depth;
        }
        auto [top, d] = stack.back();
        stack.pop_back();
        inorder.push_back(top);
        node = tree.right[top];
        depth = d + 1;
    }
    if (static_cast<int>(inorder.size()) != n) throw InvalidTreeError("tree does not reach every key");
    for (int i = 0; i < n; ++i) {
        if (inorder[i] != i) throw InvalidTreeError("in-order traversal does not list keys in order");
    }
    return BstLevelVector(std::move(levels));
}

std::vector<int> cartesian_depths(std::span<const int> levels) {
    const int n = static_cast<int>(levels.size());
    std::vector<int> depth(n, 0);
    std::vector<int> lower_left(n, -1), lower_right(n, -1);
    std::vector<int> stack;
    for (int j = 0; j < n; ++j) {
        while (!stack.empty() && levels[stack.back()] >= levels[j]) stack.pop_back();
        lower_left[j] = stack.empty() ? -1 : stack.back();
        stack.push_back(j);
    }
    stack.clear();
    for (int j = n - 1; j >= 0; --j) {
        while (!stack.empty() && levels[stack.back()] >= levels[j]) stack.pop_back();
        lower_right[j] = stack.empty() ? -1 : stack.back();
        stack.push_back(j);
    }
    // Parent is the deeper of the two nearest strictly lower keys; process
    // keys by increasing level so parents are finished first.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return levels[a] < levels[b]; });
    for (int j : order) {
        int parent = -1;
        if (lower_left[j] >= 0) parent = lower_left[j];
        if (lower_right[j] >= 0 && (parent < 0 || levels[lower_right[j]] > levels[parent])) parent = lower_right[j];
        depth[j] = parent < 0 ? 1 : depth[parent] + 1;
    }
    return depth;
}

}  // namespace robtree
