#include "robtree/optimal.hpp"

#include "robtree/errors.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <thread>
#include <tuple>

namespace robtree {

namespace {

// Runs fn(s) for every s in [0, count) on up to `jobs` worker threads.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (jobs == 1) {
        for (std::size_t s = 0; s < count; ++s) fn(s);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
            try {
                for (std::size_t s = next++; s < count; s = next++) fn(s);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

namespace {

// Interval DP over integer-valued weights of type T (long long or mpz_class).
// cost(i, j) over keys i..j-1, half-open; ties go to the smallest root.
template <typename T>
std::pair<std::vector<int>, T> bst_dp(const std::vector<T>& weights, BstDpMode mode) {
    const int n = static_cast<int>(weights.size());
    const int w = n + 1;
    std::vector<T> prefix(n + 1, T(0));
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + weights[i];
    std::vector<T> cost(static_cast<std::size_t>(w) * w, T(0));
    std::vector<int> root(static_cast<std::size_t>(w) * w, -1);
    auto at = [w](int i, int j) { return static_cast<std::size_t>(i) * w + j; };

    T best(0), c(0);
    for (int len = 1; len <= n; ++len) {
        for (int i = 0; i + len <= n; ++i) {
            const int j = i + len;
            int lo = i, hi = j - 1;
            if (mode == BstDpMode::KnuthRestricted && len > 1) {
                lo = root[at(i, j - 1)];
                hi = root[at(i + 1, j)];
            }
            int best_root = -1;
            for (int r = lo; r <= hi; ++r) {
                c = cost[at(i, r)] + cost[at(r + 1, j)];
                if (best_root < 0 || c < best) {
                    best = c;
                    best_root = r;
                }
            }
            cost[at(i, j)] = best + (prefix[j] - prefix[i]);
            root[at(i, j)] = best_root;
        }
    }

    std::vector<int> levels(n, 0);
    std::vector<std::tuple<int, int, int>> work{{0, n, 1}};
    while (!work.empty()) {
        auto [i, j, level] = work.back();
        work.pop_back();
        if (i >= j) continue;
        const int r = root[at(i, j)];
        levels[r] = level;
        work.emplace_back(i, r, level + 1);
        work.emplace_back(r + 1, j, level + 1);
    }
    return {std::move(levels), cost[at(0, n)]};
}

}  // namespace

OptimalBst optimal_bst(const FrequencyVector& freq, BstDpMode mode) {
    const int n = static_cast<int>(freq.size());
    if (n == 0) throw EmptyInputError("optimal_bst needs at least one key");
    // Scale to integers; every cost is a sum of at most n*n weights.
    mpz_class denom = 1;
    for (const auto& f : freq.weights()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), f.get_den().get_mpz_t());
    std::vector<mpz_class> scaled;
    scaled.reserve(n);
    mpz_class total = 0;
    for (const auto& f : freq.weights()) {
        scaled.push_back(f.get_num() * (denom / f.get_den()));
        total += scaled.back();
    }
    const mpz_class bound = total * n + 1;
    std::vector<int> levels;
    mpz_class cost;
    if (mpz_sizeinbase(bound.get_mpz_t(), 2) < 62) {
        std::vector<long long> small;
        small.reserve(n);
        for (const auto& x : scaled) small.push_back(x.get_si());
        auto [l, c] = bst_dp(small, mode);
        levels = std::move(l);
        cost = mpz_class(static_cast<long>(c));
    } else {
        auto [l, c] = bst_dp(scaled, mode);
        levels = std::move(l);
        cost = std::move(c);
    }
    Rational value(cost, denom);
    value.canonicalize();
    return OptimalBst{BstLevelVector(std::move(levels)), std::move(value)};
}

OptimalHuffman optimal_huffman(const FrequencyVector& freq) {
    const int n = static_cast<int>(freq.size());
    if (n == 0) throw EmptyInputError("optimal_huffman needs at least one key");
    if (n == 1) return OptimalHuffman{HtLengthVector({0}), 0};

    struct Item {
        Rational weight;
        int min_key;
        int created;
        int node;
    };
    auto after = [](const Item& a, const Item& b) {
        if (a.weight != b.weight) return a.weight > b.weight;
        if (a.min_key != b.min_key) return a.min_key > b.min_key;
        return a.created > b.created;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(after)> queue(after);
    std::vector<int> parent(2 * n - 1, -1);
    int created = 0;
    for (int i = 0; i < n; ++i) queue.push(Item{freq[i], i, created++, i});
    int next_node = n;
    while (queue.size() > 1) {
        Item a = queue.top();
        queue.pop();
        Item b = queue.top();
        queue.pop();
        parent[a.node] = next_node;
        parent[b.node] = next_node;
        queue.push(Item{a.weight + b.weight, std::min(a.min_key, b.min_key), created++, next_node});
        ++next_node;
    }
    // Internal nodes are created after their children, so depths resolve
    // from the root downwards.
    std::vector<int> depth(2 * n - 1, 0);
    for (int v = next_node - 2; v >= 0; --v) depth[v] = depth[parent[v]] + 1;
    std::vector<int> lengths(depth.begin(), depth.begin() + n);
    HtLengthVector result(std::move(lengths));
    Rational cost = ht_cost(result, freq);
    return OptimalHuffman{std::move(result), std::move(cost)};
}

std::vector<std::string> canonical_codewords(std::span<const int> lengths) {
    if (!kraft_valid(lengths)) throw InvalidTreeError("canonical codes need a Kraft-valid length vector");
    const std::size_t n = lengths.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lengths[a] < lengths[b]; });
    std::vector<std::string> codes(n);
    std::string code;
    bool first = true;
    for (std::size_t key : order) {
        const auto len = static_cast<std::size_t>(lengths[key]);
        if (first) {
            code.assign(len, '0');
            first = false;
        } else {
            // Binary increment, then extend with zeros.
            std::size_t pos = code.size();
            while (pos > 0 && code[pos - 1] == '1') code[--pos] = '0';
            if (pos == 0) throw InvalidTreeError("codeword space exhausted");
            code[pos - 1] = '1';
            code.append(len - code.size(), '0');
        }
        codes[key] = code;
    }
    return codes;
}

std::vector<OptimalBst> optimal_bsts(const ScenarioSet& scenarios, unsigned jobs) {
    std::vector<OptimalBst> out(scenarios.num_scenarios());
    parallel_for(out.size(), jobs, [&](std::size_t s) { out[s] = optimal_bst(scenarios.scenario(s)); });
    return out;
}

std::vector<OptimalHuffman> optimal_huffmans(const ScenarioSet& scenarios, unsigned jobs) {
    std::vector<OptimalHuffman> out(scenarios.num_scenarios());
    parallel_for(out.size(), jobs, [&](std::size_t s) { out[s] = optimal_huffman(scenarios.scenario(s)); });
    return out;
}

std::vector<Rational> per_scenario_optima(const ScenarioSet& scenarios, Family family, unsigned jobs) {
    std::vector<Rational> opt;
    if (family == Family::Bst) {
        for (auto& o : optimal_bsts(scenarios, jobs)) opt.push_back(o.cost);
    } else {
        for (auto& o : optimal_huffmans(scenarios, jobs)) opt.push_back(o.cost);
    }
    return opt;
}

}  // namespace robtree
