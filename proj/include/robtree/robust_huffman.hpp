#pragma once

#include "robtree/core.hpp"

#include <span>
#include <string>
#include <vector>

namespace robtree {

/// Binary code tree; leaves carry 0-based key indices.
class CodeTree {
public:
    struct Node {
        int child[2] = {-1, -1};
        int key = -1;
    };

    /// Trie of the given codewords, codewords[i] belonging to key i. Throws
    /// InvalidTreeError if the set is not prefix-free.
    static CodeTree from_codewords(std::span<const std::string> codewords);

    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t num_keys() const { return num_keys_; }

    /// Depth of every key's leaf. Throws InvalidTreeError if a leaf has no
    /// key or a key has no leaf.
    std::vector<int> key_depths() const;
    /// Root-to-leaf bit strings per key.
    std::vector<std::string> key_codewords() const;
    /// True if some inner node has exactly one child.
    bool has_unary_node() const;

    /// Contracts every out-degree-1 inner node into its child. Key depths
    /// never grow, the key set is kept, and the result is a fixpoint.
    CodeTree compactify() const;

private:
    std::vector<Node> nodes_;  // nodes_[0] is the root
    std::size_t num_keys_ = 0;
};

struct RhtResult {
    HtLengthVector lengths;                   // after compactification
    std::vector<int> pre_compaction_lengths;  // scenario prefix + shortest code
    std::vector<std::string> pre_compaction_codewords;
    std::vector<int> source_scenario;         // 0-based scenario chosen per key
    std::vector<std::string> codewords;       // canonical code of `lengths`
};

/// Aggregates the scenario-optimal Huffman codes: each key takes its
/// shortest code over all scenarios (smallest scenario on ties), prefixed
/// with the scenario number in ceil(log2 k) bits; the resulting trie is then
/// compactified. Regret is at most ceil(log2 k) in every scenario.
RhtResult r_ht_detailed(const ScenarioSet& scenarios, unsigned jobs = 1);

enum class RhtRoute {
    Codewords,     // concatenate scenario prefix and codeword, then compactify
    LevelByLevel,  // r_ht_lengths_fast, canonical build, then compactify
};

/// Both routes share the pre-compaction lengths and the regret bound, but
/// the final lengths can differ: compaction depends on where the leaves sit.
HtLengthVector r_ht(const ScenarioSet& scenarios, unsigned jobs = 1, RhtRoute route = RhtRoute::Codewords);

/// Same aggregation from already computed scenario codeword sets.
RhtResult r_ht_from_codes(std::span<const std::vector<std::string>> scenario_codewords);

/// Length-only route: L_i = ceil(log2 k) + min_s L^s_i. Equals the
/// pre-compaction lengths of r_ht.
HtLengthVector r_ht_lengths_fast(std::span<const HtLengthVector> optimal_lengths);

/// Builds a tree level by level from canonical codewords and compactifies.
HtLengthVector build_and_compactify(const HtLengthVector& lengths);

/// ceil(log2 k), the additive regret bound of r_ht.
int r_ht_regret_bound(std::size_t k);

/// Binary encoding of `value` in exactly `width` bits.
std::string fixed_width_binary(std::size_t value, int width);

/// True iff no codeword is a prefix of another (pairwise check).
bool is_prefix_free(std::span<const std::string> codewords);

}  // namespace robtree
