#include "robtree/fairness.hpp"

#include "robtree/errors.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace robtree {

namespace {

constexpr int kInfinity = std::numeric_limits<int>::max() / 4;

int count_zeros(std::string_view s) { return static_cast<int>(std::count(s.begin(), s.end(), '0')); }

}  // namespace

ScenarioString::ScenarioString(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_) {
        if (c != '0' && c != '1') throw ParseError("scenario string may only contain 0 and 1");
    }
    zeros_ = count_zeros(bits_);
}

long long opt_uniform(long long m) {
    if (m < 0) throw DomainError("opt_uniform needs m >= 0");
    const int c = ceil_log2(m + 1);
    return (m + 1) * c - (1LL << c) + 1;
}

long long loss(long long m1, int m0, long long m2) {
    if (m0 != 0 && m0 != 1) throw DomainError("loss: the root indicator must be 0 or 1");
    if (m1 < 0 || m2 < 0) throw DomainError("loss: negative key count");
    return m1 + m0 + m2 + opt_uniform(m1) + opt_uniform(m2) - opt_uniform(m1 + m0 + m2);
}

long long alpha_star_bound(long long a, long long b) {
    if (a < 0 || b < 0) throw DomainError("alpha_star_bound needs non-negative counts");
    return a * floor_log2(b + 2);
}

std::pair<int, int> regret_point(const ScenarioString& s, std::span<const int> levels) {
    if (levels.size() != s.size()) throw DimensionError("tree and string differ in length");
    long long cost0 = 0, cost1 = 0;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        (s.bits()[i] == '0' ? cost0 : cost1) += levels[i];
    }
    return {static_cast<int>(cost0 - opt_uniform(s.zeros())), static_cast<int>(cost1 - opt_uniform(s.ones()))};
}

const FairnessSolver::Table& FairnessSolver::table(std::string_view sub) {
    std::string key(sub);
    if (auto it = tables_.find(key); it != tables_.end()) return it->second;
    Table t = build(sub);
    return tables_.emplace(std::move(key), std::move(t)).first->second;
}

FairnessSolver::Table FairnessSolver::build(std::string_view sub) {
    const int len = static_cast<int>(sub.size());
    if (len == 0) return Table{{0}, {-1}, {0}};

    const int a = count_zeros(sub);
    const int b = len - a;
    // Child tables first; references stay valid across later insertions.
    std::vector<const Table*> left(len), right(len);
    for (int r = 0; r < len; ++r) {
        left[r] = &table(sub.substr(0, r));
        right[r] = &table(sub.substr(r + 1));
    }
    std::vector<int> zeros_before(len + 1, 0);
    for (int i = 0; i < len; ++i) zeros_before[i + 1] = zeros_before[i] + (sub[i] == '0');

    int cap = static_cast<int>(alpha_star_bound(a, b));
    for (;;) {
        Table t;
        t.beta.assign(cap + 1, kInfinity);
        t.root.assign(cap + 1, -1);
        t.left_alpha.assign(cap + 1, 0);
        for (int r = 0; r < len; ++r) {
            const int a1 = zeros_before[r];
            const int a0 = sub[r] == '0';
            const int a2 = a - a1 - a0;
            const int b1 = r - a1;
            const int b0 = 1 - a0;
            const int b2 = b - b1 - b0;
            const int loss0 = static_cast<int>(loss(a1, a0, a2));
            const int loss1 = static_cast<int>(loss(b1, b0, b2));
            const auto& tl = left[r]->beta;
            const auto& tr = right[r]->beta;
            const int cap_left = static_cast<int>(tl.size()) - 1;
            const int cap_right = static_cast<int>(tr.size()) - 1;
            for (int alpha = loss0; alpha <= cap; ++alpha) {
                const int rest = alpha - loss0;
                const int top = std::min(rest, cap_left);
                for (int a_left = 0; a_left <= top; ++a_left) {
                    const int a_right = std::min(rest - a_left, cap_right);
                    if (tl[a_left] >= kInfinity || tr[a_right] >= kInfinity) continue;
                    const int value = tl[a_left] + tr[a_right] + loss1;
                    if (value < t.beta[alpha]) {
                        t.beta[alpha] = value;
                        t.root[alpha] = r;
                        t.left_alpha[alpha] = a_left;
                    }
                }
            }
        }
        // Allowing a larger 0-regret can only help.
        for (int alpha = 1; alpha <= cap; ++alpha) {
            if (t.beta[alpha - 1] <= t.beta[alpha]) {
                t.beta[alpha] = t.beta[alpha - 1];
                t.root[alpha] = t.root[alpha - 1];
                t.left_alpha[alpha] = t.left_alpha[alpha - 1];
            }
        }
        if (t.beta[cap] == 0) {
            int end = cap;
            while (end > 0 && t.beta[end - 1] == 0) --end;
            t.beta.resize(end + 1);
            t.root.resize(end + 1);
            t.left_alpha.resize(end + 1);
            return t;
        }
        cap = 2 * cap + 1;
    }
}

BstLevelVector FairnessSolver::reconstruct(std::string_view s, int alpha) {
    std::vector<int> levels(s.size(), 0);
    // (offset, length, alpha, level)
    std::vector<std::tuple<int, int, int, int>> work{{0, static_cast<int>(s.size()), alpha, 1}};
    while (!work.empty()) {
        auto [offset, len, budget, level] = work.back();
        work.pop_back();
        if (len == 0) continue;
        std::string_view sub = s.substr(static_cast<std::size_t>(offset), static_cast<std::size_t>(len));
        const Table& t = table(sub);
        const int at = std::min(budget, static_cast<int>(t.beta.size()) - 1);
        const int r = t.root[at];
        const int a_left = t.left_alpha[at];
        const int a1 = count_zeros(sub.substr(0, r));
        const int a0 = sub[r] == '0';
        const int a2 = count_zeros(sub) - a1 - a0;
        const int rest = at - static_cast<int>(loss(a1, a0, a2));
        levels[offset + r] = level;
        work.emplace_back(offset, r, a_left, level + 1);
        work.emplace_back(offset + r + 1, len - r - 1, rest - a_left, level + 1);
    }
    return BstLevelVector(std::move(levels));
}

FairnessSolver::Result FairnessSolver::min_regret(const ScenarioString& s, int alpha) {
    if (alpha < 0) throw DomainError("alpha must be non-negative");
    if (s.size() == 0) return Result{0, BstLevelVector()};
    const Table& t = table(s.bits());
    const int at = std::min(alpha, static_cast<int>(t.beta.size()) - 1);
    if (t.beta[at] >= kInfinity) throw DomainError("no tree meets the 0-regret bound");
    return Result{t.beta[at], reconstruct(s.bits(), at)};
}

std::vector<int> FairnessSolver::regret_profile(const ScenarioString& s) { return table(s.bits()).beta; }

int FairnessSolver::alpha_star(const ScenarioString& s) { return static_cast<int>(table(s.bits()).beta.size()) - 1; }

ParetoFront FairnessSolver::pareto_front(const ScenarioString& s) {
    ParetoFront front;
    if (s.size() == 0) {
        front.points.push_back(RegretPoint{0, 0, BstLevelVector()});
        return front;
    }
    const std::vector<int> beta = table(s.bits()).beta;
    for (int alpha = 0; alpha < static_cast<int>(beta.size()); ++alpha) {
        if (beta[alpha] >= kInfinity) continue;
        if (!front.points.empty() && front.points.back().beta <= beta[alpha]) continue;
        front.points.push_back(RegretPoint{alpha, beta[alpha], reconstruct(s.bits(), alpha)});
    }
    return front;
}

FairnessSolver::Result min_regret(const ScenarioString& s, int alpha) { return FairnessSolver().min_regret(s, alpha); }

ParetoFront pareto_front(const ScenarioString& s) { return FairnessSolver().pareto_front(s); }

}  // namespace robtree
