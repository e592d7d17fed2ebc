// Command-line front end: solve, enumerate, export and reproduce experiments.
#include "robtree/data.hpp"
#include "robtree/errors.hpp"
#include "robtree/fairness.hpp"
#include "robtree/json_io.hpp"
#include "robtree/milp.hpp"
#include "robtree/optimal.hpp"
#include "robtree/oracle.hpp"
#include "robtree/robust_bst.hpp"
#include "robtree/robust_huffman.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace robtree;
namespace rj = robtree::json;
using Json = nlohmann::json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Common {
    std::string format = "json";
    unsigned jobs = 1;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    out << text;
    if (!out) throw ParseError("cannot write '" + path + "'");
}

std::string levels_text(std::span<const int> levels) {
    std::string out;
    for (std::size_t i = 0; i < levels.size(); ++i) out += (i ? " " : "") + std::to_string(levels[i]);
    return out;
}

std::string report_csv(const MetricReport& r, const ScenarioSet& scenarios) {
    std::ostringstream out;
    out << "scenario,cost,optimum,ratio,regret\n";
    for (std::size_t s = 0; s < scenarios.num_scenarios(); ++s) {
        out << scenarios.scenario_names()[s] << "," << to_string(r.per_scenario_cost[s]) << ","
            << to_string(r.per_scenario_opt[s]) << ","
            << (r.per_scenario_ratio[s] ? to_string(*r.per_scenario_ratio[s]) : "") << ","
            << to_string(r.per_scenario_cost[s] - r.per_scenario_opt[s]) << "\n";
    }
    out << "max," << to_string(r.worst_cost) << ",," << (r.competitive_ratio ? to_string(*r.competitive_ratio) : "")
        << "," << to_string(r.regret) << "\n";
    return out.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(cell, &used));
            if (used != cell.size()) throw std::invalid_argument(cell);
        } catch (const std::logic_error&) {
            throw ParseError("not an integer: '" + cell + "'");
        }
    }
    if (out.empty()) throw EmptyInputError("empty list");
    return out;
}

std::vector<long long> to_long(const std::vector<int>& v) { return {v.begin(), v.end()}; }

int emit_tree(const Common& c, const ScenarioSet& scenarios, std::span<const int> levels, const Json& tree,
              Family family, const std::string& out_path, const std::string& report_path) {
    const auto optima = per_scenario_optima(scenarios, family, c.jobs);
    const MetricReport report = evaluate(levels, scenarios, optima);
    if (c.format == "csv") {
        std::string text = "levels," + levels_text(levels) + "\n" + report_csv(report, scenarios);
        write_output(out_path, text);
        if (!report_path.empty()) write_output(report_path, report_csv(report, scenarios));
        return 0;
    }
    const Json doc = {{"tree", tree}, {"report", rj::metric_report(report, scenarios)}};
    write_output(out_path, doc.dump(2) + "\n");
    if (!report_path.empty()) write_output(report_path, doc["report"].dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robust binary search trees and Huffman codes under multiple frequency scenarios"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--jobs", common.jobs, "Threads for the per-scenario phase")->check(CLI::PositiveNumber);

    std::string in_path, out_path = "-", report_path, metric_text = "worst", family_text = "bst";

    auto* solve_bst = app.add_subcommand("solve-bst", "Robust BST from per-scenario optimal trees");
    solve_bst->add_option("--in", in_path, "Scenario CSV")->required();
    solve_bst->add_option("--metric", metric_text, "Metric shown first (all are reported)")
        ->check(CLI::IsMember({"worst", "ratio", "regret"}));
    solve_bst->add_option("--out", out_path, "Output file");
    solve_bst->add_option("--report", report_path, "Separate metric report file");

    auto* solve_ht = app.add_subcommand("solve-ht", "Robust Huffman tree from per-scenario optimal codes");
    solve_ht->add_option("--in", in_path, "Scenario CSV")->required();
    solve_ht->add_option("--out", out_path, "Output file");
    solve_ht->add_option("--report", report_path, "Separate metric report file");

    std::string bits, cities0, cities1;
    int city_count = 30;
    auto* pareto = app.add_subcommand("pareto", "Regret Pareto front of a two-group string");
    auto* bits_opt = pareto->add_option("--string", bits, "0/1 membership string");
    auto* c0_opt = pareto->add_option("--cities0", cities0, "Name list of group 0");
    pareto->add_option("--cities1", cities1, "Name list of group 1")->needs(c0_opt);
    c0_opt->excludes(bits_opt);
    pareto->add_option("--n", city_count, "Names taken from each list")->check(CLI::NonNegativeNumber);
    pareto->add_option("--out", out_path, "Output file");

    auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by exhaustive enumeration");
    oracle_cmd->add_option("--in", in_path, "Scenario CSV")->required();
    oracle_cmd->add_option("--family", family_text)->check(CLI::IsMember({"bst", "ht"}));
    oracle_cmd->add_option("--metric", metric_text)->check(CLI::IsMember({"worst", "ratio", "regret"}));

    auto* milp_cmd = app.add_subcommand("emit-milp", "Write the exact model in LP format");
    milp_cmd->add_option("--in", in_path, "Scenario CSV")->required();
    milp_cmd->add_option("--family", family_text)->check(CLI::IsMember({"bst", "ht"}));
    milp_cmd->add_option("--metric", metric_text)->check(CLI::IsMember({"worst", "ratio", "regret"}));
    milp_cmd->add_option("--out", out_path, "Output file");

    std::string gen_kind;
    std::string gen_numbers;
    int gen_k = 2;
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"adversarial", "partition", "ecp", "fairness"}));
    gen->add_option("--family", family_text)->check(CLI::IsMember({"bst", "ht"}));
    gen->add_option("--k", gen_k, "Scenarios for adversarial instances")->check(CLI::PositiveNumber);
    gen->add_option("--numbers", gen_numbers, "Comma-separated integers for partition / ecp");
    gen->add_option("--cities0", cities0);
    gen->add_option("--cities1", cities1);
    gen->add_option("--n", city_count)->check(CLI::NonNegativeNumber);
    gen->add_option("--out", out_path, "Output file");

    std::string exp_kind, milp_dir, data_path;
    std::vector<std::string> solution_specs;
    int remark_a = 5, remark_b = 5;
    std::string remark_method = "dp";
    auto* experiment = app.add_subcommand("experiment", "Reproduce an experiment");
    experiment->add_option("kind", exp_kind)->required()->check(CLI::IsMember({"table1", "remark", "cities"}));
    experiment->add_option("--data", data_path, "Letter table (table1) or city directory (cities)");
    experiment->add_option("--milp-dir", milp_dir, "Write the six LP files here");
    experiment->add_option("--solution", solution_specs, "key=path, e.g. bst-ratio=sol.txt");
    experiment->add_option("--a", remark_a)->check(CLI::NonNegativeNumber);
    experiment->add_option("--b", remark_b)->check(CLI::NonNegativeNumber);
    experiment->add_option("--method", remark_method)->check(CLI::IsMember({"dp", "oracle"}));
    experiment->add_option("--n", city_count)->check(CLI::NonNegativeNumber);
    experiment->add_option("--out", out_path, "Output file");

    std::string levels_arg;
    auto* validate = app.add_subcommand("validate", "Check a level or length vector");
    validate->add_option("--levels", levels_arg, "Comma-separated levels")->required();
    validate->add_option("--family", family_text)->check(CLI::IsMember({"bst", "ht"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        const Family family = parse_family(family_text);
        const Metric metric = parse_metric(metric_text);

        if (*solve_bst) {
            const ScenarioSet s = data::load_scenarios_csv(in_path);
            const BstLevelVector tree = r_bst(s, common.jobs);
            return emit_tree(common, s, tree.levels(), rj::bst_tree(s, tree), Family::Bst, out_path, report_path);
        }
        if (*solve_ht) {
            const ScenarioSet s = data::load_scenarios_csv(in_path);
            const HtLengthVector tree = r_ht(s, common.jobs);
            return emit_tree(common, s, tree.lengths(), rj::ht_tree(s, tree), Family::Ht, out_path, report_path);
        }
        if (*pareto) {
            ScenarioString s;
            if (!cities0.empty()) {
                if (cities1.empty()) throw DomainError("--cities0 needs --cities1");
                s = data::gen_fairness_string(data::load_name_list(cities0), data::load_name_list(cities1), city_count);
            } else if (*bits_opt) {
                s = ScenarioString(bits);
            } else {
                throw DomainError("give --string or --cities0/--cities1");
            }
            const ParetoFront front = pareto_front(s);
            if (common.format == "json") {
                write_output(out_path, rj::pareto_front(s, front).dump(2) + "\n");
            } else {
                std::string text = "alpha,beta,levels\n";
                for (const auto& p : front.points) {
                    text += std::to_string(p.alpha) + "," + std::to_string(p.beta) + "," + levels_text(p.witness.levels()) + "\n";
                }
                write_output(out_path, text);
            }
            return 0;
        }
        if (*oracle_cmd) {
            const ScenarioSet s = data::load_scenarios_csv(in_path);
            const oracle::ExactResult r = oracle::exact_robust(s, family, metric);
            if (common.format == "json") {
                const Json doc = {{"family", to_string(family)},
                                  {"metric", to_string(metric)},
                                  {"value", rj::rational(r.value)},
                                  {"levels", r.witness}};
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "family,metric,value,levels\n"
                          << to_string(family) << "," << to_string(metric) << "," << to_string(r.value) << ","
                          << levels_text(r.witness) << "\n";
            }
            return 0;
        }
        if (*milp_cmd) {
            const ScenarioSet s = data::load_scenarios_csv(in_path);
            write_output(out_path, milp::build_model(s, family, metric).to_lp());
            return 0;
        }
        if (*gen) {
            if (gen_kind == "fairness") {
                if (cities0.empty() || cities1.empty()) throw DomainError("fairness needs --cities0 and --cities1");
                const auto s =
                    data::gen_fairness_string(data::load_name_list(cities0), data::load_name_list(cities1), city_count);
                write_output(out_path, s.bits() + "\n");
                return 0;
            }
            ScenarioSet s;
            std::optional<Rational> threshold;
            if (gen_kind == "adversarial") {
                s = data::gen_adversarial(family, gen_k);
            } else if (gen_kind == "partition") {
                auto inst = data::gen_partition_bst(to_long(parse_int_list(gen_numbers)));
                s = inst.scenarios;
                threshold = inst.threshold;
            } else {
                auto inst = data::gen_ecp_ht(to_long(parse_int_list(gen_numbers)));
                s = inst.scenarios;
                threshold = inst.threshold;
            }
            std::string text;
            if (threshold) text = "# threshold " + to_string(*threshold) + "\n";
            write_output(out_path, text + data::scenarios_to_csv(s));
            return 0;
        }
        if (*experiment) {
            if (exp_kind == "table1") {
                const auto path = data_path.empty() ? data::default_data_dir() / "letter_frequencies.csv"
                                                    : std::filesystem::path(data_path);
                data::Table1Options options;
                options.milp_dir = milp_dir;
                options.jobs = common.jobs;
                for (const auto& spec : solution_specs) {
                    const auto eq = spec.find('=');
                    if (eq == std::string::npos) throw ParseError("--solution expects key=path, got '" + spec + "'");
                    options.solutions[spec.substr(0, eq)] = spec.substr(eq + 1);
                }
                const auto report = data::run_table1(data::load_language_table(path), options);
                Json checks = Json::array();
                std::string csv = "row,quantity,computed,target,relative_error,status\n";
                for (const auto& c : report.checks) {
                    const char* status = c.within_tolerance ? "PASS" : "WARN";
                    checks.push_back({{"name", c.name},
                                      {"computed", c.computed},
                                      {"target", c.target},
                                      {"relative_error", c.relative_error},
                                      {"status", status}});
                    const auto space = c.name.find(' ');
                    csv += c.name.substr(0, space) + "," + c.name.substr(space + 1) + "," + std::to_string(c.computed) +
                           "," + std::to_string(c.target) + "," + std::to_string(c.relative_error) + "," + status + "\n";
                }
                Json optimal = Json::object();
                for (const auto& [key, value] : report.optimal) optimal[key] = rj::rational(value);
                const auto triple = [](const data::MetricTriple& t) {
                    return Json{{"cost", rj::rational(t.cost)},
                                {"ratio", rj::rational(t.ratio)},
                                {"regret", rj::rational(t.regret)}};
                };
                const Json doc = {{"r_bst", triple(report.r_bst)},
                                  {"r_bst_upper_median", triple(report.r_bst_upper_median)},
                                  {"r_ht", triple(report.r_ht)},
                                  {"r_ht_codeword_route", triple(report.r_ht_codeword_route)},
                                  {"r_bst_levels", report.r_bst_tree.levels()},
                                  {"r_bst_upper_median_levels", report.r_bst_upper_median_tree.levels()},
                                  {"r_ht_lengths", report.r_ht_tree.lengths()},
                                  {"r_ht_codeword_route_lengths", report.r_ht_codeword_route_tree.lengths()},
                                  {"checks", checks},
                                  {"optimal", optimal},
                                  {"milp_files", report.milp_files}};
                write_output(out_path, common.format == "json" ? doc.dump(2) + "\n" : csv);
                return 0;
            }
            if (exp_kind == "remark") {
                FairnessSolver solver;
                const auto method = remark_method == "dp" ? data::RemarkMethod::Dp : data::RemarkMethod::Oracle;
                std::string csv = "a,b,holds\n";
                Json rows = Json::array();
                bool all = true;
                for (int a = 0; a <= remark_a; ++a) {
                    for (int b = 0; b <= remark_b; ++b) {
                        const bool ok = data::check_remark1(a, b, method, &solver);
                        all = all && ok;
                        rows.push_back({{"a", a}, {"b", b}, {"holds", ok}});
                        csv += std::to_string(a) + "," + std::to_string(b) + "," + (ok ? "true" : "false") + "\n";
                    }
                }
                write_output(out_path, common.format == "json" ? Json{{"all_hold", all}, {"cells", rows}}.dump(2) + "\n"
                                                               : csv);
                return 0;
            }
            // cities: Pareto fronts for every pair of bundled countries.
            const auto dir = data_path.empty() ? data::default_data_dir() / "cities" : std::filesystem::path(data_path);
            std::vector<std::filesystem::path> files;
            for (const auto& entry : std::filesystem::directory_iterator(dir)) {
                if (entry.path().extension() == ".txt") files.push_back(entry.path());
            }
            std::sort(files.begin(), files.end());
            FairnessSolver solver;
            Json pairs = Json::array();
            std::string csv = "country0,country1,string,alpha,beta\n";
            for (std::size_t i = 0; i < files.size(); ++i) {
                for (std::size_t j = i + 1; j < files.size(); ++j) {
                    const auto s = data::gen_fairness_string(data::load_name_list(files[i]), data::load_name_list(files[j]),
                                                             city_count);
                    const auto front = solver.pareto_front(s);
                    Json points = Json::array();
                    for (const auto& p : front.points) {
                        points.push_back({p.alpha, p.beta});
                        csv += files[i].stem().string() + "," + files[j].stem().string() + "," + s.bits() + "," +
                               std::to_string(p.alpha) + "," + std::to_string(p.beta) + "\n";
                    }
                    pairs.push_back({{"country0", files[i].stem().string()},
                                     {"country1", files[j].stem().string()},
                                     {"string", s.bits()},
                                     {"front", points}});
                }
            }
            write_output(out_path, common.format == "json" ? pairs.dump(2) + "\n" : csv);
            return 0;
        }
        if (*validate) {
            const std::vector<int> levels = parse_int_list(levels_arg);
            if (family == Family::Bst) {
                if (auto why = bst_levels_violation(levels)) {
                    std::cout << "invalid: " << *why << "\n";
                    return kExitDomain;
                }
            } else if (!kraft_valid(levels)) {
                std::cout << "invalid: lengths violate Kraft's inequality (sum " << to_string(kraft_sum(levels))
                          << " > 1)\n";
                return kExitDomain;
            }
            std::cout << "valid\n";
            return 0;
        }
    } catch (const robtree::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
