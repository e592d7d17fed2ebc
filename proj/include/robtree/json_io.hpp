#pragma once

#include "robtree/core.hpp"
#include "robtree/fairness.hpp"

#include <nlohmann/json.hpp>

#include <span>
#include <string>
#include <vector>

namespace robtree::json {

using nlohmann::json;

/// {"value": "p/q", "decimal": x}
json rational(const Rational& value);
/// Accepts the object form above, a "p/q" string or an integer.
Rational parse_rational_field(const json& value);

/// {"keys", "levels", "convention"}; Huffman trees also carry "codewords".
json bst_tree(const ScenarioSet& scenarios, const BstLevelVector& levels);
json ht_tree(const ScenarioSet& scenarios, const HtLengthVector& lengths);

/// Levels of a tree document, checked against the convention it names.
struct ParsedTree {
    Family family = Family::Bst;
    std::vector<std::string> keys;
    std::vector<int> levels;
};
ParsedTree parse_tree(const json& doc);

json metric_report(const MetricReport& report, const ScenarioSet& scenarios);
json pareto_front(const ScenarioString& s, const ParetoFront& front);

}  // namespace robtree::json
