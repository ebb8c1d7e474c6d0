#pragma once

/**
 * @file minimizing.hpp
 * @brief Minimizing absolutely ordered sequences of elongated m-ary Huffman
 * trees and the closed forms built on the Fibonacci-like polynomials.
 *
 * For N internal nodes and arity m the minimizing sequence is
 *   G_0(m-1), then (m-1) copies each of G_1(m-1), ..., G_N(m-1),
 * and its Huffman cost is (G_{N+4}(m-1) - 2) / (m-1) - (N+3).
 */

#include <cstddef>
#include <string>
#include <vector>

#include "mhuff/huffman.hpp"
#include "mhuff/integer.hpp"

namespace mhuff {

/// N >= 1 internal nodes and arity m >= 2; n = N (m - 1) + 1 leaves.
class MinimizingSpec {
public:
    MinimizingSpec(std::size_t internal_nodes, unsigned arity);

    std::size_t internal_nodes() const noexcept { return internal_nodes_; }
    unsigned arity() const noexcept { return arity_; }
    std::size_t leaf_count() const noexcept { return internal_nodes_ * (arity_ - 1) + 1; }

private:
    std::size_t internal_nodes_;
    unsigned arity_;
};

WeightSequence pmin_abs(const MinimizingSpec& spec);

/// [G_0(m), ..., G_N(m)].
std::vector<Integer> representative_sequence(const Integer& m, std::size_t N);

/// sum_{i=0..N} G_i(m) through the closed form (G_{N+2}(m) - 2) / m + 1. Requires m >= 1.
Integer sum_S(std::size_t N, const Integer& m);

/// Huffman cost of pmin_abs(spec) in closed form.
Integer cost_formula(const MinimizingSpec& spec);

/// Fib_{N+5} - (N+5): the m = 2 case of cost_formula. Requires N >= 1.
Integer binary_cost_special_case(std::size_t N);

struct CostReport {
    MinimizingSpec spec;
    WeightSequence sequence;
    Integer formula_cost;
    Integer constructed_cost;
    bool agreement = false;
    bool absolutely_ordered = false;
    bool elongated = false;
    bool left_sided = false;
    std::size_t height = 0;

    /// Costs agree and the built tree has the expected elongated left-sided shape of height N.
    bool consistent() const noexcept {
        return agreement && absolutely_ordered && elongated && left_sided && height == spec.internal_nodes();
    }
};

/// Builds pmin_abs(spec), runs the Huffman construction and pairs its cost with cost_formula.
CostReport cost_report(const MinimizingSpec& spec);

/// Integer grid with labelled rows and columns.
struct Table {
    std::string row_title;
    std::string column_title;
    std::vector<Integer> row_keys;
    std::vector<Integer> column_keys;
    std::vector<std::vector<Integer>> cells;  // cells[row][column]
};

/// Rows m = 1..max_m, columns i = 0..max_i, cell G_i(m).
Table emit_table1(unsigned max_m = 15, std::size_t max_i = 13);

/// Rows arity 2..max_arity, columns N = 1..max_N, cell cost_formula(N, arity).
Table emit_table2(unsigned max_arity = 21, std::size_t max_N = 10);

/// Bare comma-separated cells, one row per line, no header and no row keys.
std::string render_csv(const Table& table);

/// Aligned markdown table including row and column keys.
std::string render_markdown(const Table& table);

}  // namespace mhuff
