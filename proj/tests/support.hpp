#pragma once

#include "robtree/core.hpp"

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace robtree::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Small-denominator rationals with roughly one zero in five.
inline Rational random_weight(Rng& rng) {
    if (uniform_int(rng, 0, 4) == 0) return 0;
    return make_rational(uniform_int(rng, 1, 20), uniform_int(rng, 1, 12));
}

inline FrequencyVector random_frequency(Rng& rng, int n) {
    std::vector<Rational> w;
    for (int i = 0; i < n; ++i) w.push_back(random_weight(rng));
    if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; })) w[uniform_int(rng, 0, n - 1)] = 1;
    return FrequencyVector(std::move(w)).normalized();
}

inline ScenarioSet random_scenarios(Rng& rng, int n, int k) {
    std::vector<FrequencyVector> s;
    for (int i = 0; i < k; ++i) s.push_back(random_frequency(rng, n));
    return ScenarioSet::unlabeled(std::move(s));
}

inline std::vector<Rational> q(std::initializer_list<const char*> cells) {
    std::vector<Rational> out;
    for (const char* c : cells) out.push_back(parse_rational(c));
    return out;
}

inline FrequencyVector fv(std::initializer_list<const char*> cells) { return FrequencyVector(q(cells)); }

/// Minimum BST cost by top-down recursion over intervals, cost only.
inline Rational reference_bst_cost(const FrequencyVector& f) {
    const int n = static_cast<int>(f.size());
    std::map<std::pair<int, int>, Rational> memo;
    auto rec = [&](auto&& self, int i, int j) -> Rational {
        if (i > j) return 0;
        if (auto it = memo.find({i, j}); it != memo.end()) return it->second;
        Rational weight = 0;
        for (int t = i; t <= j; ++t) weight += f[t];
        Rational best = -1;
        for (int r = i; r <= j; ++r) {
            Rational c = self(self, i, r - 1) + self(self, r + 1, j);
            if (best < 0 || c < best) best = c;
        }
        return memo[{i, j}] = best + weight;
    };
    return rec(rec, 0, n - 1);
}

/// Huffman cost as the sum of all merged weights; 0 for a single key.
inline Rational reference_huffman_cost(const FrequencyVector& f) {
    std::vector<Rational> heap(f.weights().begin(), f.weights().end());
    Rational total = 0;
    while (heap.size() > 1) {
        std::sort(heap.begin(), heap.end());
        Rational merged = heap[0] + heap[1];
        total += merged;
        heap.erase(heap.begin(), heap.begin() + 2);
        heap.push_back(merged);
    }
    return total;
}

}  // namespace robtree::testing
