#include "robtree/robust_huffman.hpp"

#include "robtree/errors.hpp"
#include "robtree/optimal.hpp"

#include <algorithm>

namespace robtree {

CodeTree CodeTree::from_codewords(std::span<const std::string> codewords) {
    if (codewords.empty()) throw EmptyInputError("no codewords");
    CodeTree tree;
    tree.num_keys_ = codewords.size();
    tree.nodes_.emplace_back();
    for (std::size_t key = 0; key < codewords.size(); ++key) {
        int node = 0;
        for (char bit : codewords[key]) {
            if (bit != '0' && bit != '1') throw ParseError("codeword contains a non-binary symbol");
            if (tree.nodes_[node].key >= 0) throw InvalidTreeError("codeword set is not prefix-free");
            const int b = bit - '0';
            if (tree.nodes_[node].child[b] < 0) {
                tree.nodes_[node].child[b] = static_cast<int>(tree.nodes_.size());
                tree.nodes_.emplace_back();
            }
            node = tree.nodes_[node].child[b];
        }
        Node& leaf = tree.nodes_[node];
        if (leaf.key >= 0 || leaf.child[0] >= 0 || leaf.child[1] >= 0) {
            throw InvalidTreeError("codeword set is not prefix-free");
        }
        leaf.key = static_cast<int>(key);
    }
    return tree;
}

std::vector<int> CodeTree::key_depths() const {
    std::vector<int> depth(num_keys_, -1);
    std::vector<std::pair<int, int>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [node, d] = stack.back();
        stack.pop_back();
        const Node& v = nodes_[node];
        if (v.child[0] < 0 && v.child[1] < 0) {
            if (v.key < 0) throw InvalidTreeError("leaf without a key");
            depth[v.key] = d;
        }
        for (int c : v.child) {
            if (c >= 0) stack.emplace_back(c, d + 1);
        }
    }
    for (int d : depth) {
        if (d < 0) throw InvalidTreeError("key without a leaf");
    }
    return depth;
}

std::vector<std::string> CodeTree::key_codewords() const {
    std::vector<std::string> codes(num_keys_);
    std::vector<std::pair<int, std::string>> stack{{0, ""}};
    while (!stack.empty()) {
        auto [node, prefix] = std::move(stack.back());
        stack.pop_back();
        const Node& v = nodes_[node];
        if (v.key >= 0) codes[v.key] = prefix;
        for (int b = 0; b < 2; ++b) {
            if (v.child[b] >= 0) stack.emplace_back(v.child[b], prefix + static_cast<char>('0' + b));
        }
    }
    return codes;
}

bool CodeTree::has_unary_node() const {
    return std::any_of(nodes_.begin(), nodes_.end(),
                       [](const Node& v) { return (v.child[0] < 0) != (v.child[1] < 0); });
}

CodeTree CodeTree::compactify() const {
    // Children are always created after their parent, so a reverse sweep
    // sees every child before its parent. rep[v] is the node that stands in
    // for v once its unary chain is contracted.
    const int count = static_cast<int>(nodes_.size());
    std::vector<int> rep(count, -1);
    for (int v = count - 1; v >= 0; --v) {
        const Node& node = nodes_[v];
        const bool has0 = node.child[0] >= 0, has1 = node.child[1] >= 0;
        if (!has0 && !has1) {
            if (node.key < 0) throw InvalidTreeError("leaf without a key");
            rep[v] = v;
        } else if (has0 && has1) {
            rep[v] = v;
        } else {
            rep[v] = rep[has0 ? node.child[0] : node.child[1]];
        }
    }
    CodeTree out;
    out.num_keys_ = num_keys_;
    out.nodes_.emplace_back();
    std::vector<std::pair<int, int>> stack{{rep[0], 0}};  // (old node, new node)
    while (!stack.empty()) {
        auto [old_id, new_id] = stack.back();
        stack.pop_back();
        const Node& src = nodes_[old_id];
        out.nodes_[new_id].key = src.key;
        for (int b = 0; b < 2; ++b) {
            if (src.child[b] < 0) continue;
            const int child = static_cast<int>(out.nodes_.size());
            out.nodes_.emplace_back();
            out.nodes_[new_id].child[b] = child;
            stack.emplace_back(rep[src.child[b]], child);
        }
    }
    return out;
}

std::string fixed_width_binary(std::size_t value, int width) {
    std::string bits(static_cast<std::size_t>(width), '0');
    for (int i = width - 1; i >= 0 && value > 0; --i, value >>= 1) {
        if (value & 1) bits[static_cast<std::size_t>(i)] = '1';
    }
    return bits;
}

bool is_prefix_free(std::span<const std::string> codewords) {
    for (std::size_t a = 0; a < codewords.size(); ++a) {
        for (std::size_t b = 0; b < codewords.size(); ++b) {
            if (a == b) continue;
            const auto& x = codewords[a];
            const auto& y = codewords[b];
            if (x.size() <= y.size() && y.compare(0, x.size(), x) == 0) return false;
        }
    }
    return true;
}

int r_ht_regret_bound(std::size_t k) { return ceil_log2(static_cast<long long>(k)); }

RhtResult r_ht_from_codes(std::span<const std::vector<std::string>> scenario_codewords) {
    if (scenario_codewords.empty()) throw EmptyInputError("need at least one scenario code");
    const std::size_t k = scenario_codewords.size();
    const std::size_t n = scenario_codewords.front().size();
    for (const auto& c : scenario_codewords) {
        if (c.size() != n) throw DimensionError("scenario codes cover different key counts");
    }
    const int prefix_bits = r_ht_regret_bound(k);
    RhtResult result;
    result.pre_compaction_codewords.resize(n);
    result.pre_compaction_lengths.resize(n);
    result.source_scenario.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        for (std::size_t s = 1; s < k; ++s) {
            if (scenario_codewords[s][i].size() < scenario_codewords[best][i].size()) best = s;
        }
        result.source_scenario[i] = static_cast<int>(best);
        result.pre_compaction_codewords[i] = fixed_width_binary(best, prefix_bits) + scenario_codewords[best][i];
        result.pre_compaction_lengths[i] = static_cast<int>(result.pre_compaction_codewords[i].size());
    }
    CodeTree compact = CodeTree::from_codewords(result.pre_compaction_codewords).compactify();
    result.lengths = HtLengthVector(compact.key_depths());
    result.codewords = canonical_codewords(result.lengths.lengths());
    return result;
}

RhtResult r_ht_detailed(const ScenarioSet& scenarios, unsigned jobs) {
    std::vector<std::vector<std::string>> codes;
    for (const auto& o : optimal_huffmans(scenarios, jobs)) codes.push_back(canonical_codewords(o.lengths.lengths()));
    return r_ht_from_codes(codes);
}

HtLengthVector r_ht(const ScenarioSet& scenarios, unsigned jobs, RhtRoute route) {
    if (route == RhtRoute::Codewords) return r_ht_detailed(scenarios, jobs).lengths;
    std::vector<HtLengthVector> optimal;
    for (auto& o : optimal_huffmans(scenarios, jobs)) optimal.push_back(std::move(o.lengths));
    return build_and_compactify(r_ht_lengths_fast(optimal));
}

HtLengthVector r_ht_lengths_fast(std::span<const HtLengthVector> optimal_lengths) {
    if (optimal_lengths.empty()) throw EmptyInputError("need at least one scenario length vector");
    const std::size_t n = optimal_lengths.front().size();
    for (const auto& l : optimal_lengths) {
        if (l.size() != n) throw DimensionError("scenario length vectors differ in size");
    }
    const int prefix_bits = r_ht_regret_bound(optimal_lengths.size());
    std::vector<int> lengths(n);
    for (std::size_t i = 0; i < n; ++i) {
        int m = optimal_lengths.front()[i];
        for (const auto& l : optimal_lengths) m = std::min(m, l[i]);
        lengths[i] = prefix_bits + m;
    }
    return HtLengthVector(std::move(lengths));
}

HtLengthVector build_and_compactify(const HtLengthVector& lengths) {
    const auto codes = canonical_codewords(lengths.lengths());
    return HtLengthVector(CodeTree::from_codewords(codes).compactify().key_depths());
}

}  // namespace robtree
