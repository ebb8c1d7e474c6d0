#include "mhuff/minimizing.hpp"

#include <algorithm>
#include <stdexcept>

#include "mhuff/polynomial.hpp"

namespace mhuff {

MinimizingSpec::MinimizingSpec(std::size_t internal_nodes, unsigned arity)
    : internal_nodes_(internal_nodes), arity_(arity) {
    if (internal_nodes_ < 1) throw InvalidInput("N must be at least 1");
    if (arity_ < 2) throw InvalidInput("arity m must be at least 2, got " + std::to_string(arity_));
}

WeightSequence pmin_abs(const MinimizingSpec& spec) {
    const unsigned m = spec.arity();
    const auto values = representative_sequence(m - 1, spec.internal_nodes());
    std::vector<Integer> weights;
    weights.reserve(spec.leaf_count());
    weights.push_back(values[0]);
    for (std::size_t i = 1; i < values.size(); ++i) weights.insert(weights.end(), m - 1, values[i]);
    return WeightSequence(std::move(weights), m);
}

std::vector<Integer> representative_sequence(const Integer& m, std::size_t N) {
    std::vector<Integer> out;
    out.reserve(N + 1);
    for (std::size_t i = 0; i <= N; ++i) out.push_back(g_value(i, m));
    return out;
}

Integer sum_S(std::size_t N, const Integer& m) {
    if (m < 1) throw InvalidInput("sum_S requires m >= 1");
    return exact_divide(g_value(N + 2, m) - 2, m, "S(N, m) closed form") + 1;
}

Integer cost_formula(const MinimizingSpec& spec) {
    const Integer base = spec.arity() - 1;
    const std::size_t N = spec.internal_nodes();
    return exact_divide(g_value(N + 4, base) - 2, base, "cost closed form") - Integer(N + 3);
}

Integer binary_cost_special_case(std::size_t N) {
    if (N < 1) throw InvalidInput("N must be at least 1");
    return fibonacci(N + 5) - Integer(N + 5);
}

CostReport cost_report(const MinimizingSpec& spec) {
    WeightSequence sequence = pmin_abs(spec);
    const auto built = build_huffman(sequence);
    CostReport report{spec, sequence, cost_formula(spec), tree_cost(built.tree)};
    report.agreement = report.formula_cost == report.constructed_cost;
    report.absolutely_ordered = is_absolutely_ordered(built.trace, spec.arity()).ordered;
    report.elongated = is_elongated(built.tree);
    report.left_sided = report.elongated && is_left_sided(built.tree);
    report.height = tree_height(built.tree);
    return report;
}

Table emit_table1(unsigned max_m, std::size_t max_i) {
    if (max_m < 1) throw InvalidInput("table 1 needs max_m >= 1");
    Table t{"m", "i", {}, {}, {}};
    for (std::size_t i = 0; i <= max_i; ++i) t.column_keys.emplace_back(i);
    for (unsigned m = 1; m <= max_m; ++m) {
        t.row_keys.emplace_back(m);
        t.cells.push_back(representative_sequence(m, max_i));
    }
    return t;
}

Table emit_table2(unsigned max_arity, std::size_t max_N) {
    if (max_arity < 2) throw InvalidInput("table 2 needs max_arity >= 2");
    if (max_N < 1) throw InvalidInput("table 2 needs max_N >= 1");
    Table t{"arity m", "N", {}, {}, {}};
    for (std::size_t N = 1; N <= max_N; ++N) t.column_keys.emplace_back(N);
    for (unsigned m = 2; m <= max_arity; ++m) {
        t.row_keys.emplace_back(m);
        std::vector<Integer> row;
        row.reserve(max_N);
        for (std::size_t N = 1; N <= max_N; ++N) row.push_back(cost_formula(MinimizingSpec(N, m)));
        t.cells.push_back(std::move(row));
    }
    return t;
}

std::string render_csv(const Table& table) {
    std::string out;
    for (const auto& row : table.cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += row[c].str();
        }
        out += '\n';
    }
    return out;
}

std::string render_markdown(const Table& table) {
    const std::size_t columns = table.column_keys.size() + 1;
    std::vector<std::vector<std::string>> grid;
    grid.push_back({table.row_title + " \\ " + table.column_title});
    for (const auto& key : table.column_keys) grid.back().push_back(key.str());
    for (std::size_t r = 0; r < table.cells.size(); ++r) {
        std::vector<std::string> line{table.row_keys[r].str()};
        for (const auto& cell : table.cells[r]) line.push_back(cell.str());
        grid.push_back(std::move(line));
    }
    std::vector<std::size_t> width(columns, 3);
    for (const auto& line : grid) {
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
    }
    auto emit = [&](const std::vector<std::string>& line) {
        std::string s = "|";
        for (std::size_t c = 0; c < columns; ++c) {
            s += ' ' + std::string(width[c] - line[c].size(), ' ') + line[c] + " |";
        }
        return s + '\n';
    };
    std::string out = emit(grid[0]);
    out += '|';
    for (std::size_t c = 0; c < columns; ++c) out += ' ' + std::string(width[c] - 1, '-') + ": |";
    out += '\n';
    for (std::size_t r = 1; r < grid.size(); ++r) out += emit(grid[r]);
    return out;
}

}  // namespace mhuff
