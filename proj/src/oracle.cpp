#include "robtree/oracle.hpp"

#include "robtree/errors.hpp"
#include "robtree/optimal.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace robtree::oracle {

namespace {

void check_range(int n, int max_n, const char* what) {
    if (n < 1 || n > max_n) {
        throw LimitError(std::string(what) + " enumeration supports 1.." + std::to_string(max_n) + " keys, got " +
                         std::to_string(n));
    }
}

struct BstGenerator {
    std::vector<int> levels;
    std::vector<std::tuple<int, int, int>> pending;  // (first, last, level)
    const LevelVisitor& visit;
    bool stopped = false;

    void run() {
        if (stopped) return;
        if (pending.empty()) {
            if (!visit(levels)) stopped = true;
            return;
        }
        auto [i, j, level] = pending.back();
        pending.pop_back();
        if (i > j) {
            run();
        } else {
            for (int r = i; r <= j && !stopped; ++r) {
                levels[r] = level;
                pending.emplace_back(r + 1, j, level + 1);
                pending.emplace_back(i, r - 1, level + 1);
                run();
                pending.pop_back();
                pending.pop_back();
            }
        }
        pending.emplace_back(i, j, level);
    }
};

// Non-decreasing depth sequences of full binary trees with n leaves.
// `budget` is the unused Kraft mass in units of 2^-max_depth.
void depth_multisets(int n, int max_depth, int min_depth, long long budget, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
    const int placed = static_cast<int>(current.size());
    if (placed == n) {
        if (budget == 0) out.push_back(current);
        return;
    }
    const int remaining = n - placed;
    for (int d = min_depth; d <= max_depth; ++d) {
        const long long unit = 1LL << (max_depth - d);
        if (unit > budget) continue;
        // Remaining leaves are at depth >= d, so they use at most
        // remaining * unit and at least remaining * 2^0.
        if (unit * remaining < budget) continue;
        if (static_cast<long long>(remaining) > budget) break;
        current.push_back(d);
        depth_multisets(n, max_depth, d, budget - unit, current, out);
        current.pop_back();
    }
}

// Integer view of a scenario set: costs scaled by a common denominator.
struct ScaledScenarios {
    std::vector<std::vector<long long>> weights;  // [s][i]
    std::vector<long long> optima;                // scaled by the same factor
};

std::optional<ScaledScenarios> scale_to_integers(const ScenarioSet& scenarios, const std::vector<Rational>& optima,
                                                 int max_level) {
    mpz_class den = 1;
    for (const auto& f : scenarios.scenarios()) {
        for (const auto& w : f.weights()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), w.get_den().get_mpz_t());
    }
    for (const auto& o : optima) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), o.get_den().get_mpz_t());
    ScaledScenarios out;
    const mpz_class limit = mpz_class(1) << 60;
    for (const auto& f : scenarios.scenarios()) {
        std::vector<long long> row;
        mpz_class total = 0;
        for (const auto& w : f.weights()) {
            Rational scaled = w * den;
            mpz_class v = scaled.get_num();
            total += v;
            if (!v.fits_slong_p()) return std::nullopt;
            row.push_back(v.get_si());
        }
        if (total * max_level * max_level >= limit) return std::nullopt;
        out.weights.push_back(std::move(row));
    }
    for (const auto& o : optima) {
        mpz_class v = Rational(o * den).get_num();
        if (!v.fits_slong_p()) return std::nullopt;
        out.optima.push_back(v.get_si());
    }
    return out;
}

// num/den compared with cross multiplication; den > 0.
struct Fraction {
    __int128 num = 0;
    __int128 den = 1;
};

bool less(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }

}  // namespace

void for_each_bst(int n, const LevelVisitor& visit) {
    check_range(n, kMaxBstKeys, "BST");
    BstGenerator gen{std::vector<int>(n, 0), {{0, n - 1, 1}}, visit};
    gen.run();
}

std::vector<BstLevelVector> enumerate_bsts(int n) {
    std::vector<BstLevelVector> out;
    for_each_bst(n, [&](std::span<const int> l) {
        out.emplace_back(std::vector<int>(l.begin(), l.end()));
        return true;
    });
    return out;
}

void for_each_ht_length_vector(int n, const LevelVisitor& visit) {
    check_range(n, kMaxHtKeys, "Huffman");
    const int max_depth = n - 1;
    std::vector<std::vector<int>> multisets;
    std::vector<int> current;
    depth_multisets(n, max_depth, 0, 1LL << max_depth, current, multisets);
    for (auto& m : multisets) {
        std::vector<int> perm = m;  // sorted ascending
        do {
            if (!visit(perm)) return;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

std::vector<HtLengthVector> enumerate_ht_length_vectors(int n) {
    std::vector<HtLengthVector> out;
    for_each_ht_length_vector(n, [&](std::span<const int> l) {
        out.emplace_back(std::vector<int>(l.begin(), l.end()));
        return true;
    });
    return out;
}

std::vector<std::vector<int>> enumerate_valid_length_vectors(int n, int max_length) {
    check_range(n, kMaxHtKeys, "Huffman");
    std::vector<std::vector<int>> out;
    std::vector<int> v(n, 0);
    for (;;) {
        if (kraft_valid(v)) out.push_back(v);
        int pos = n - 1;
        while (pos >= 0 && v[pos] == max_length) v[pos--] = 0;
        if (pos < 0) break;
        ++v[pos];
    }
    return out;
}

ExactResult exact_robust(const ScenarioSet& scenarios, Family family, Metric metric) {
    const int n = static_cast<int>(scenarios.num_keys());
    check_range(n, family == Family::Bst ? kMaxBstKeys : kMaxHtKeys, family == Family::Bst ? "BST" : "Huffman");
    const std::vector<Rational> optima = per_scenario_optima(scenarios, family);
    const std::size_t k = scenarios.num_scenarios();
    if (metric == Metric::Ratio &&
        std::none_of(optima.begin(), optima.end(), [](const Rational& o) { return o > 0; })) {
        throw DomainError("competitive ratio undefined: every scenario optimum is 0");
    }

    ExactResult best;
    bool have = false;
    auto enumerate = [&](const LevelVisitor& v) {
        if (family == Family::Bst) {
            for_each_bst(n, v);
        } else {
            for_each_ht_length_vector(n, v);
        }
    };

    if (auto scaled = scale_to_integers(scenarios, optima, n)) {
        Fraction best_value;
        enumerate([&](std::span<const int> levels) {
            Fraction value;
            bool first = true;
            for (std::size_t s = 0; s < k; ++s) {
                long long cost = 0;
                const auto& w = scaled->weights[s];
                for (int i = 0; i < n; ++i) cost += w[i] * levels[i];
                Fraction f;
                switch (metric) {
                    case Metric::Worst: f = {cost, 1}; break;
                    case Metric::Regret: f = {cost - scaled->optima[s], 1}; break;
                    case Metric::Ratio:
                        if (scaled->optima[s] == 0) continue;
                        f = {cost, scaled->optima[s]};
                        break;
                }
                if (first || less(value, f)) value = f;
                first = false;
            }
            if (!have || less(value, best_value)) {
                best_value = value;
                best.witness.assign(levels.begin(), levels.end());
                have = true;
            }
            return true;
        });
    } else {
        Rational best_value;
        enumerate([&](std::span<const int> levels) {
            MetricReport r = evaluate(levels, scenarios, optima);
            Rational value = metric_value(r, metric);
            if (!have || value < best_value) {
                best_value = value;
                best.witness.assign(levels.begin(), levels.end());
                have = true;
            }
            return true;
        });
    }
    // Recompute exactly from the witness so the reported value never depends
    // on the integer fast path.
    best.value = metric_value(evaluate(std::span<const int>(best.witness), scenarios, optima), metric);
    return best;
}

ParetoFront exact_pareto(const ScenarioString& s) {
    const int n = static_cast<int>(s.size());
    if (n == 0) return ParetoFront{{RegretPoint{0, 0, BstLevelVector()}}};
    check_range(n, kMaxBstKeys, "BST");
    // Lowest beta seen per alpha, first tree in enumeration order as witness.
    std::map<int, std::pair<int, std::vector<int>>> best;
    for_each_bst(n, [&](std::span<const int> levels) {
        auto [alpha, beta] = regret_point(s, levels);
        auto it = best.find(alpha);
        if (it == best.end()) {
            best.emplace(alpha, std::make_pair(beta, std::vector<int>(levels.begin(), levels.end())));
        } else if (beta < it->second.first) {
            it->second = {beta, std::vector<int>(levels.begin(), levels.end())};
        }
        return true;
    });
    ParetoFront front;
    for (auto& [alpha, entry] : best) {
        if (!front.points.empty() && front.points.back().beta <= entry.first) continue;
        front.points.push_back(RegretPoint{alpha, entry.first, BstLevelVector(std::move(entry.second))});
    }
    return front;
}

}  // namespace robtree::oracle
