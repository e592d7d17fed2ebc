#include "robtree/data.hpp"

#include "robtree/errors.hpp"
#include "robtree/milp.hpp"
#include "robtree/optimal.hpp"
#include "robtree/oracle.hpp"
#include "robtree/robust_bst.hpp"
#include "robtree/robust_huffman.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace robtree::data {

std::filesystem::path default_data_dir() {
#ifdef ROBTREE_DATA_DIR
    return ROBTREE_DATA_DIR;
#else
    return "data";
#endif
}

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool is_integer(const std::string& s) {
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    return s.size() > start &&
           std::all_of(s.begin() + static_cast<long>(start), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

std::vector<std::string> padded_labels(std::size_t count, const std::string& prefix) {
    const std::size_t width = std::max<std::size_t>(2, std::to_string(count).size());
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= count; ++i) {
        std::string d = std::to_string(i);
        labels.push_back(prefix + std::string(width - d.size(), '0') + d);
    }
    return labels;
}

std::vector<FrequencyVector> to_vectors(const std::vector<std::vector<Rational>>& columns) {
    std::vector<FrequencyVector> out;
    for (const auto& c : columns) out.emplace_back(c);
    return out;
}

}  // namespace

ScenarioSet parse_scenarios_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> header;
    std::vector<std::pair<std::string, std::vector<Rational>>> rows;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto cells = split_csv_line(t);
        if (header.empty()) {
            if (cells.size() < 2 || cells[0] != "key") {
                throw ParseError("line " + std::to_string(line_no) + ": header must be key,<scenario names...>");
            }
            header = std::move(cells);
            continue;
        }
        if (cells.size() != header.size()) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                             " cells, found " + std::to_string(cells.size()));
        }
        if (cells[0].empty()) throw ParseError("line " + std::to_string(line_no) + ": empty key");
        std::vector<Rational> values;
        for (std::size_t c = 1; c < cells.size(); ++c) {
            Rational v = parse_rational(cells[c]);
            if (v < 0) {
                throw DomainError("line " + std::to_string(line_no) + ": negative frequency for key '" + cells[0] +
                                  "' in scenario '" + header[c] + "'");
            }
            values.push_back(std::move(v));
        }
        rows.emplace_back(cells[0], std::move(values));
    }
    if (header.empty()) throw ParseError("missing header line");
    if (rows.empty()) throw EmptyInputError("no key rows");
    const bool numeric = std::all_of(rows.begin(), rows.end(), [](const auto& r) { return is_integer(r.first); });
    std::sort(rows.begin(), rows.end(), [numeric](const auto& x, const auto& y) {
        return numeric ? Rational(x.first) < Rational(y.first) : x.first < y.first;
    });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const bool same = numeric ? Rational(rows[i].first) == Rational(rows[i - 1].first)
                                  : rows[i].first == rows[i - 1].first;
        if (same) throw DomainError("duplicate key '" + rows[i].first + "'");
    }
    const std::size_t k = header.size() - 1;
    std::vector<std::string> labels;
    std::vector<std::vector<Rational>> columns(k);
    for (auto& [label, values] : rows) {
        labels.push_back(label);
        for (std::size_t s = 0; s < k; ++s) columns[s].push_back(values[s]);
    }
    std::vector<FrequencyVector> scenarios;
    for (std::size_t s = 0; s < k; ++s) {
        FrequencyVector f(std::move(columns[s]));
        if (f.total() == 0) throw DomainError("scenario '" + header[s + 1] + "' sums to 0");
        scenarios.push_back(f.normalized());
    }
    return ScenarioSet(std::move(labels), std::move(scenarios),
                       std::vector<std::string>(header.begin() + 1, header.end()));
}

ScenarioSet load_scenarios_csv(const std::filesystem::path& path) { return parse_scenarios_csv(read_file(path)); }

std::string scenarios_to_csv(const ScenarioSet& scenarios) {
    std::ostringstream out;
    out << "key";
    for (const auto& name : scenarios.scenario_names()) out << "," << name;
    out << "\n";
    for (std::size_t i = 0; i < scenarios.num_keys(); ++i) {
        out << scenarios.key_labels()[i];
        for (const auto& f : scenarios.scenarios()) out << "," << to_string(f[i]);
        out << "\n";
    }
    return out.str();
}

LanguageFrequencyTable load_language_table(const std::filesystem::path& path) {
    ScenarioSet s = load_scenarios_csv(path);
    std::vector<std::string> expected;
    for (char c = 'a'; c <= 'z'; ++c) expected.emplace_back(1, c);
    if (s.key_labels() != expected) throw DomainError("letter table must list exactly the keys a..z");
    return LanguageFrequencyTable{std::move(s)};
}

ScenarioSet gen_adversarial(Family family, int k) {
    if (k < 1) throw DomainError("need at least one scenario");
    const int n = family == Family::Bst ? k : k + 1;
    std::vector<std::vector<Rational>> columns(k, std::vector<Rational>(n, 0));
    for (int s = 0; s < k; ++s) columns[s][s] = 1;
    return ScenarioSet(padded_labels(n, "k"), to_vectors(columns));
}

PartitionInstance gen_partition_bst(const std::vector<long long>& a) {
    if (a.empty()) throw DomainError("partition instance needs at least one number");
    for (long long v : a) {
        if (v < 0) throw DomainError("partition numbers must be non-negative");
    }
    PartitionInstance inst;
    inst.padded = a;
    inst.m = 1;
    inst.ell = 0;
    while (inst.m < static_cast<int>(a.size())) {
        inst.m *= 2;
        ++inst.ell;
    }
    inst.padded.resize(inst.m, 0);
    const long long sum = std::accumulate(inst.padded.begin(), inst.padded.end(), 0LL);
    // Smallest integer strictly above (ell + 3/2) * sum = (2 ell + 3) sum / 2.
    inst.w = (2LL * inst.ell + 3) * sum / 2 + 1;
    const Rational bound = make_rational(2LL * inst.ell + 3, 2) * from_integer(sum);
    if (!(from_integer(inst.w) > bound)) throw DomainError("internal: w does not exceed its bound");

    const int n = 3 * inst.m - 1;
    std::vector<Rational> f1, f2;
    for (int i = 0; i < inst.m; ++i) {
        f1.push_back(from_integer(inst.padded[i]));
        f1.emplace_back(0);
        f2.emplace_back(0);
        f2.push_back(from_integer(inst.padded[i]));
        if (i + 1 < inst.m) {
            f1.push_back(from_integer(inst.w));
            f2.push_back(from_integer(inst.w));
        }
    }
    long long weighted = 0;
    for (int j = 1; j <= inst.ell; ++j) weighted += j * (1LL << (j - 1));
    inst.base_cost = from_integer(inst.w * weighted + (inst.ell + 1) * sum);
    inst.threshold = inst.base_cost + from_integer(sum) / 2;
    inst.scenarios = ScenarioSet(padded_labels(n, "k"), {FrequencyVector(std::move(f1)), FrequencyVector(std::move(f2))});
    return inst;
}

EcpInstance gen_ecp_ht(const std::vector<long long>& a) {
    if (a.empty() || a.size() % 2 != 0) throw DomainError("equal-cardinality partition needs an even, non-zero count");
    long long sum = 0;
    for (long long v : a) {
        if (v < 0) throw DomainError("partition numbers must be non-negative");
        sum += v;
    }
    if (sum % 2 != 0) throw DomainError("equal-cardinality partition needs an even total");
    EcpInstance inst;
    inst.half = 1;
    inst.m = 0;
    while (2 * inst.half < static_cast<int>(a.size())) {
        inst.half *= 2;
        ++inst.m;
    }
    inst.padded = a;
    inst.padded.resize(2 * static_cast<std::size_t>(inst.half), 0);
    const long long n = inst.half;
    const long long m = inst.m;
    inst.total_half = sum / 2;
    const long long slack = inst.total_half * (2 * m + 5);
    inst.z = 2 * n * (m + 3) + n * (m + 2);
    inst.big_m = slack + 1;
    inst.c1 = 10 * inst.z * inst.big_m;
    inst.c2 = inst.c1 + 2 * slack;
    inst.threshold = from_integer(inst.c1 + inst.z * inst.big_m + slack);
    if (!(inst.big_m > slack)) throw DomainError("internal: M does not exceed D(2m+5)");

    // Keys: u_1..u_n, u', v_1..v_2n (label order is key order).
    std::vector<std::string> labels = padded_labels(static_cast<std::size_t>(n), "u");
    labels.emplace_back("uprime");
    for (auto& l : padded_labels(2 * static_cast<std::size_t>(n), "v")) labels.push_back(std::move(l));
    std::vector<Rational> f1, f2;
    for (long long j = 0; j < n; ++j) {
        f1.push_back(from_integer(inst.big_m));
        f2.push_back(from_integer(inst.big_m));
    }
    f1.push_back(from_integer(inst.c1));
    f2.push_back(from_integer(inst.c2));
    for (long long v : inst.padded) {
        f1.push_back(from_integer(inst.big_m + v));
        f2.push_back(from_integer(inst.big_m - v));
    }
    inst.scenarios = ScenarioSet(std::move(labels), {FrequencyVector(std::move(f1)), FrequencyVector(std::move(f2))});
    return inst;
}

ScenarioString gen_fairness_string(const std::vector<std::string>& names0, const std::vector<std::string>& names1,
                                   int n) {
    if (n < 0) throw DomainError("n must be non-negative");
    if (static_cast<int>(names0.size()) < n || static_cast<int>(names1.size()) < n) {
        throw DomainError("each list needs at least " + std::to_string(n) + " names");
    }
    std::vector<std::pair<std::string, char>> merged;
    for (int i = 0; i < n; ++i) {
        merged.emplace_back(names0[i], '0');
        merged.emplace_back(names1[i], '1');
    }
    std::sort(merged.begin(), merged.end());
    std::string bits;
    for (const auto& [name, bit] : merged) bits.push_back(bit);
    return ScenarioString(std::move(bits));
}

std::vector<std::string> load_name_list(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::vector<std::string> names;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        names.push_back(t);
    }
    return names;
}

bool check_remark1(int a, int b, RemarkMethod method, FairnessSolver* solver) {
    if (a < 0 || b < 0) throw DomainError("counts must be non-negative");
    if (method == RemarkMethod::Oracle && a + b > oracle::kMaxBstKeys) {
        throw LimitError("oracle sweep supports a + b <= " + std::to_string(oracle::kMaxBstKeys));
    }
    if (a + b == 0) return true;
    FairnessSolver local;
    FairnessSolver& dp = solver ? *solver : local;
    // All placements of a zeros among a+b positions, in lexicographic order.
    std::string bits = std::string(static_cast<std::size_t>(a), '0') + std::string(static_cast<std::size_t>(b), '1');
    do {
        ScenarioString s(bits);
        bool ok = false;
        if (method == RemarkMethod::Oracle) {
            for (const auto& p : oracle::exact_pareto(s).points) {
                if (p.alpha <= a && p.beta <= b) ok = true;
            }
        } else {
            ok = dp.min_regret(s, a).beta <= b;
        }
        if (!ok) return false;
    } while (std::next_permutation(bits.begin(), bits.end()));
    return true;
}

namespace {

MetricTriple triple_of(const MetricReport& r) { return MetricTriple{r.worst_cost, metric_value(r, Metric::Ratio), r.regret}; }

TargetCheck check(const std::string& name, const Rational& value, double target) {
    TargetCheck c;
    c.name = name;
    c.computed = to_double(value);
    c.target = target;
    c.relative_error = std::abs(c.computed - target) / target;
    c.within_tolerance = c.relative_error <= kTable1RelativeTolerance;
    return c;
}

}  // namespace

Table1Report run_table1(const LanguageFrequencyTable& table, const Table1Options& options) {
    const ScenarioSet& scenarios = table.scenarios;
    Table1Report report;

    const auto bst_optima = optimal_bsts(scenarios, options.jobs);
    std::vector<BstLevelVector> bst_levels;
    std::vector<Rational> bst_costs;
    for (const auto& o : bst_optima) {
        bst_levels.push_back(o.levels);
        bst_costs.push_back(o.cost);
    }
    report.r_bst_tree = r_bst_from_optimal(bst_levels);
    report.r_bst = triple_of(evaluate(report.r_bst_tree, scenarios, bst_costs));
    report.r_bst_upper_median_tree = r_bst_from_optimal(bst_levels, RbstStrategy::SegmentTree, nullptr, MedianTie::Upper);
    report.r_bst_upper_median = triple_of(evaluate(report.r_bst_upper_median_tree, scenarios, bst_costs));

    const std::vector<Rational> ht_costs = per_scenario_optima(scenarios, Family::Ht, options.jobs);
    report.r_ht_tree = r_ht(scenarios, options.jobs, RhtRoute::LevelByLevel);
    report.r_ht = triple_of(evaluate(report.r_ht_tree, scenarios, ht_costs));
    report.r_ht_codeword_route_tree = r_ht(scenarios, options.jobs, RhtRoute::Codewords);
    report.r_ht_codeword_route = triple_of(evaluate(report.r_ht_codeword_route_tree, scenarios, ht_costs));

    report.checks = {
        check("R-BST cost", report.r_bst.cost, 3.940),   check("R-BST ratio", report.r_bst.ratio, 1.215),
        check("R-BST regret", report.r_bst.regret, 0.680), check("R-HT cost", report.r_ht.cost, 4.425),
        check("R-HT ratio", report.r_ht.ratio, 1.091),   check("R-HT regret", report.r_ht.regret, 0.364),
    };

    for (Family family : {Family::Bst, Family::Ht}) {
        for (Metric metric : {Metric::Worst, Metric::Ratio, Metric::Regret}) {
            const std::string key = to_string(family) + "-" + to_string(metric);
            if (!options.milp_dir.empty()) {
                std::filesystem::create_directories(options.milp_dir);
                const auto path = options.milp_dir / (key + ".lp");
                std::ofstream out(path);
                out << milp::build_model(scenarios, family, metric).to_lp();
                if (!out) throw ParseError("cannot write '" + path.string() + "'");
                report.milp_files.push_back(path.string());
            }
            if (auto it = options.solutions.find(key); it != options.solutions.end()) {
                const auto levels = milp::parse_solution(read_file(it->second), static_cast<int>(scenarios.num_keys()), family);
                const auto& opt = family == Family::Bst ? bst_costs : ht_costs;
                report.optimal[key] = metric_value(evaluate(std::span<const int>(levels), scenarios, opt), metric);
            }
        }
    }
    return report;
}

}  // namespace robtree::data
