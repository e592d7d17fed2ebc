#include "robtree/milp.hpp"

#include "robtree/errors.hpp"
#include "robtree/optimal.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace robtree::milp {

std::string variable_name(int level, int key) { return "x_" + std::to_string(level) + "_" + std::to_string(key); }

namespace {

Rational power_of_two(int e) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return Rational(v);
}

void add_cost_rows(Model& model, const ScenarioSet& scenarios, Metric metric, const std::vector<Rational>& optima) {
    const int n = static_cast<int>(scenarios.num_keys());
    const int max_level = model.min_level + n - 1;
    for (std::size_t s = 0; s < scenarios.num_scenarios(); ++s) {
        const auto& f = scenarios.scenario(s);
        Rational scale = 1;
        Rational rhs = 0;
        if (metric == Metric::Ratio) {
            if (optima[s] == 0) {
                throw DomainError("ratio objective undefined: scenario " + scenarios.scenario_names()[s] +
                                  " has a zero optimum");
            }
            scale = Rational(1) / optima[s];
        } else if (metric == Metric::Regret) {
            rhs = optima[s];
        }
        Row row{"cost_" + std::to_string(s + 1), {}, Sense::LessEqual, rhs};
        for (int level = model.min_level; level <= max_level; ++level) {
            for (int i = 0; i < n; ++i) {
                if (level == 0 || f[i] == 0) continue;
                row.terms.push_back(Term{variable_name(level, i + 1), f[i] * level * scale});
            }
        }
        row.terms.push_back(Term{kCostVariable, -1});
        model.rows.push_back(std::move(row));
    }
}

Model skeleton(const ScenarioSet& scenarios, Family family, Metric metric) {
    Model model;
    model.family = family;
    model.metric = metric;
    model.num_keys = static_cast<int>(scenarios.num_keys());
    model.min_level = family == Family::Bst ? 1 : 0;
    const int n = model.num_keys;
    for (int level = model.min_level; level < model.min_level + n; ++level) {
        for (int i = 1; i <= n; ++i) model.binaries.push_back(variable_name(level, i));
    }
    for (int i = 1; i <= n; ++i) {
        Row row{"assign_" + std::to_string(i), {}, Sense::Equal, 1};
        for (int level = model.min_level; level < model.min_level + n; ++level) {
            row.terms.push_back(Term{variable_name(level, i), 1});
        }
        model.rows.push_back(std::move(row));
    }
    return model;
}

std::string format_coefficient(const Rational& c, bool& rounded) {
    if (!has_finite_decimal(c)) rounded = true;
    return to_decimal_string(abs(c));
}

const char* sense_text(Sense s) {
    switch (s) {
        case Sense::LessEqual: return "<=";
        case Sense::GreaterEqual: return ">=";
        case Sense::Equal: return "=";
    }
    return "=";
}

}  // namespace

Model build_bst_model(const ScenarioSet& scenarios, Metric metric) {
    Model model = skeleton(scenarios, Family::Bst, metric);
    const int n = model.num_keys;
    // Keys i < j on the same level need a strictly lower key between them.
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int level = 1; level <= n; ++level) {
                Row row{"sep_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(level), {},
                        Sense::GreaterEqual, -1};
                for (int r = i + 1; r < j; ++r) {
                    for (int u = 1; u < level; ++u) row.terms.push_back(Term{variable_name(u, r), 1});
                }
                row.terms.push_back(Term{variable_name(level, i), -1});
                row.terms.push_back(Term{variable_name(level, j), -1});
                model.rows.push_back(std::move(row));
            }
        }
    }
    add_cost_rows(model, scenarios, metric, per_scenario_optima(scenarios, Family::Bst));
    return model;
}

Model build_ht_model(const ScenarioSet& scenarios, Metric metric) {
    Model model = skeleton(scenarios, Family::Ht, metric);
    const int n = model.num_keys;
    for (int level = 0; level < n; ++level) {
        Row row{"kraft_" + std::to_string(level), {}, Sense::LessEqual, power_of_two(level)};
        for (int b = 0; b <= level; ++b) {
            for (int i = 1; i <= n; ++i) row.terms.push_back(Term{variable_name(b, i), power_of_two(level - b)});
        }
        model.rows.push_back(std::move(row));
    }
    add_cost_rows(model, scenarios, metric, per_scenario_optima(scenarios, Family::Ht));
    return model;
}

Model build_model(const ScenarioSet& scenarios, Family family, Metric metric) {
    return family == Family::Bst ? build_bst_model(scenarios, metric) : build_ht_model(scenarios, metric);
}

std::string Model::to_lp() const {
    std::ostringstream out;
    out << "\\ Robust " << (family == Family::Bst ? "binary search tree" : "Huffman tree") << ", metric "
        << to_string(metric) << ", " << num_keys << " keys\n";
    out << "\\ x_L_I = 1 iff key I sits on level L; C bounds every scenario row\n";
    std::ostringstream body;
    std::vector<std::string> rounded_rows;
    for (const auto& row : rows) {
        bool rounded = false;
        std::ostringstream line;
        line << " " << row.name << ":";
        std::size_t on_line = 0;
        bool first = true;
        for (const auto& t : row.terms) {
            if (t.coefficient == 0) continue;
            if (on_line == 8) {
                line << "\n  ";
                on_line = 0;
            }
            const bool negative = t.coefficient < 0;
            if (first) {
                line << (negative ? " -" : "");
            } else {
                line << (negative ? " -" : " +");
            }
            first = false;
            if (abs(t.coefficient) != 1) line << " " << format_coefficient(t.coefficient, rounded);
            line << " " << t.variable;
            ++on_line;
        }
        if (first) line << " 0 " << kCostVariable;
        line << " " << sense_text(row.sense) << " " << (row.rhs < 0 ? "-" : "")
             << format_coefficient(row.rhs, rounded) << "\n";
        if (rounded) {
            std::ostringstream note;
            note << "\\ " << row.name << ": coefficients rounded to 15 significant digits from exact values";
            for (const auto& t : row.terms) {
                if (!has_finite_decimal(t.coefficient)) note << " " << t.variable << "=" << to_string(t.coefficient);
            }
            if (!has_finite_decimal(row.rhs)) note << " rhs=" << to_string(row.rhs);
            body << note.str() << "\n";
        }
        body << line.str();
    }
    out << "Minimize\n obj: " << kCostVariable << "\n";
    out << "Subject To\n" << body.str();
    out << "Bounds\n " << kCostVariable << " free\n";
    out << "Binary\n";
    for (std::size_t i = 0; i < binaries.size(); ++i) {
        out << " " << binaries[i];
        if (i % 10 == 9 || i + 1 == binaries.size()) out << "\n";
    }
    out << "End\n";
    return out.str();
}

bool Model::satisfied_by(const std::map<std::string, Rational>& values) const {
    for (const auto& row : rows) {
        Rational lhs = 0;
        for (const auto& t : row.terms) {
            auto it = values.find(t.variable);
            if (it != values.end()) lhs += t.coefficient * it->second;
        }
        switch (row.sense) {
            case Sense::LessEqual:
                if (lhs > row.rhs) return false;
                break;
            case Sense::GreaterEqual:
                if (lhs < row.rhs) return false;
                break;
            case Sense::Equal:
                if (lhs != row.rhs) return false;
                break;
        }
    }
    return true;
}

std::size_t Model::count_rows(std::string_view prefix) const {
    std::size_t count = 0;
    for (const auto& row : rows) {
        if (std::string_view(row.name).substr(0, prefix.size()) == prefix) ++count;
    }
    return count;
}

std::string emit_bst_milp(const ScenarioSet& scenarios, Metric metric) { return build_bst_model(scenarios, metric).to_lp(); }

std::string emit_ht_milp(const ScenarioSet& scenarios, Metric metric) { return build_ht_model(scenarios, metric).to_lp(); }

std::map<std::string, Rational> assignment_for(std::span<const int> levels, Family family, const Rational& cost_value) {
    std::map<std::string, Rational> values;
    const int n = static_cast<int>(levels.size());
    const int lo = family == Family::Bst ? 1 : 0;
    for (int level = lo; level < lo + n; ++level) {
        for (int i = 1; i <= n; ++i) values[variable_name(level, i)] = levels[i - 1] == level ? 1 : 0;
    }
    values[kCostVariable] = cost_value;
    return values;
}

std::vector<int> parse_solution(std::string_view text, int num_keys, Family family) {
    if (num_keys < 1) throw DomainError("solution needs at least one key");
    const int lo = family == Family::Bst ? 1 : 0;
    const int hi = lo + num_keys - 1;
    std::vector<int> levels(num_keys, -1);
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string name, value_text;
        if (!(fields >> name)) continue;
        if (name[0] == '#' || name[0] == '\\') continue;
        if (!(fields >> value_text)) throw ParseError("line " + std::to_string(line_no) + ": missing value");
        if (name.rfind("x_", 0) != 0) continue;
        int level = 0, key = 0;
        char tail = 0;
        if (std::sscanf(name.c_str(), "x_%d_%d%c", &level, &key, &tail) != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": malformed variable name '" + name + "'");
        }
        if (level < lo || level > hi || key < 1 || key > num_keys) {
            throw ParseError("line " + std::to_string(line_no) + ": variable '" + name + "' out of range");
        }
        char* end = nullptr;
        const double value = std::strtod(value_text.c_str(), &end);
        if (end == value_text.c_str() || *end != '\0') {
            throw ParseError("line " + std::to_string(line_no) + ": malformed value '" + value_text + "'");
        }
        if (std::abs(value) <= 1e-6) continue;
        if (std::abs(value - 1.0) > 1e-6) {
            throw ParseError("variable '" + name + "' is fractional (" + value_text + ")");
        }
        if (levels[key - 1] >= 0) throw ParseError("key " + std::to_string(key) + " is assigned to more than one level");
        levels[key - 1] = level;
    }
    for (int i = 0; i < num_keys; ++i) {
        if (levels[i] < 0) throw ParseError("key " + std::to_string(i + 1) + " is not assigned to any level");
    }
    if (family == Family::Bst) {
        if (!satisfies_separation(levels)) throw InvalidTreeError("solution violates the level separation rows");
        return BstLevelVector(cartesian_depths(levels)).levels();
    }
    return HtLengthVector(std::move(levels)).lengths();
}

}  // namespace robtree::milp
