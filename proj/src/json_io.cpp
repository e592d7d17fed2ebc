#include "robtree/json_io.hpp"

#include "robtree/errors.hpp"
#include "robtree/optimal.hpp"

namespace robtree::json {

namespace {

constexpr const char* kBstConvention = "bst-root-1";
constexpr const char* kHtConvention = "ht-root-0";

json optional_rational(const std::optional<Rational>& value) { return value ? rational(*value) : json(nullptr); }

}  // namespace

json rational(const Rational& value) { return {{"value", to_string(value)}, {"decimal", to_double(value)}}; }

Rational parse_rational_field(const json& value) {
    if (value.is_object() && value.contains("value")) return parse_rational_field(value.at("value"));
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
    throw ParseError("expected a rational, found " + value.dump());
}

json bst_tree(const ScenarioSet& scenarios, const BstLevelVector& levels) {
    return {{"keys", scenarios.key_labels()}, {"levels", levels.levels()}, {"convention", kBstConvention}};
}

json ht_tree(const ScenarioSet& scenarios, const HtLengthVector& lengths) {
    return {{"keys", scenarios.key_labels()},
            {"levels", lengths.lengths()},
            {"convention", kHtConvention},
            {"codewords", canonical_codewords(lengths.lengths())}};
}

ParsedTree parse_tree(const json& doc) {
    try {
        ParsedTree tree;
        const auto convention = doc.at("convention").get<std::string>();
        if (convention == kBstConvention) {
            tree.family = Family::Bst;
        } else if (convention == kHtConvention) {
            tree.family = Family::Ht;
        } else {
            throw ParseError("unknown convention '" + convention + "'");
        }
        tree.levels = doc.at("levels").get<std::vector<int>>();
        if (doc.contains("keys")) tree.keys = doc.at("keys").get<std::vector<std::string>>();
        if (!tree.keys.empty() && tree.keys.size() != tree.levels.size()) {
            throw DimensionError("tree has " + std::to_string(tree.keys.size()) + " keys but " +
                                 std::to_string(tree.levels.size()) + " levels");
        }
        if (tree.family == Family::Bst) {
            (void)BstLevelVector(tree.levels);
        } else {
            (void)HtLengthVector(tree.levels);
        }
        return tree;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed tree document: ") + e.what());
    }
}

json metric_report(const MetricReport& report, const ScenarioSet& scenarios) {
    json per = json::array();
    for (std::size_t s = 0; s < report.per_scenario_cost.size(); ++s) {
        per.push_back({{"scenario", scenarios.scenario_names()[s]},
                       {"cost", rational(report.per_scenario_cost[s])},
                       {"optimum", rational(report.per_scenario_opt[s])},
                       {"ratio", optional_rational(report.per_scenario_ratio[s])},
                       {"regret", rational(report.per_scenario_cost[s] - report.per_scenario_opt[s])}});
    }
    return {{"worst_cost", rational(report.worst_cost)},
            {"ratio", optional_rational(report.competitive_ratio)},
            {"regret", rational(report.regret)},
            {"zero_optimum_warning", report.zero_opt_warning},
            {"scenarios", per}};
}

json pareto_front(const ScenarioString& s, const ParetoFront& front) {
    json points = json::array();
    for (const auto& p : front.points) {
        points.push_back({{"alpha", p.alpha}, {"beta", p.beta}, {"levels", p.witness.levels()}});
    }
    return {{"string", s.bits()}, {"points", points}};
}

}  // namespace robtree::json
