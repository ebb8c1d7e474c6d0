#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force cross-checks for the Huffman construction and for the
 * minimizing sequences, usable only at small sizes.
 */

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhuff/huffman.hpp"
#include "mhuff/integer.hpp"

namespace mhuff {

/// Refusal to run an enumeration larger than the configured limits.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, Integer required, Integer allowed)
        : std::runtime_error(what), required_(std::move(required)), allowed_(std::move(allowed)) {}

    const Integer& required() const noexcept { return required_; }
    const Integer& allowed() const noexcept { return allowed_; }

private:
    Integer required_;
    Integer allowed_;
};

struct OracleLimits {
    std::size_t max_leaves = 9;
    std::uint64_t candidate_budget = 10'000'000;
};

/// One strictly m-ary shape up to sibling order.
struct TreeShape {
    std::string canonical;            // "L" for a leaf, "(c1,c2,...)" with sorted children otherwise
    std::vector<std::size_t> depths;  // leaf depths, ascending
    std::size_t height = 0;
    bool elongated = true;
};

/// Number of ordered strictly m-ary trees with n leaves (Fuss-Catalan).
Integer plane_tree_count(unsigned arity, std::size_t leaves);

/// All shapes with `leaves` leaves, deduplicated up to sibling permutation.
std::vector<TreeShape> enumerate_shapes(unsigned arity, std::size_t leaves, const OracleLimits& limits = {});

/// Minimum weighted external path length over every shape, with weights
/// assigned largest-to-shallowest.
Integer exhaustive_optimal_cost(const WeightSequence& weights, const OracleLimits& limits = {});

/// True iff an elongated shape reaches the maximum height among all shapes with n leaves.
bool max_height_check(unsigned arity, std::size_t leaves, const OracleLimits& limits = {});

/// Weight space for minimality_search: non-decreasing sequences of length
/// N (m - 1) + 1 with entries in 1..max_weight.
struct SearchBounds {
    unsigned arity;
    std::size_t internal_nodes;
    std::uint64_t max_weight;

    std::size_t leaf_count() const noexcept { return internal_nodes * (arity - 1) + 1; }
    /// C(max_weight + n - 1, n).
    Integer candidate_count() const;
};

struct MinimalityResult {
    std::vector<Integer> best_sequence;  // lexicographically first among the cheapest
    Integer best_cost;
    Integer pmin_cost;
    bool matches_pmin = false;
    std::vector<std::vector<Integer>> tied_sequences;  // every admitted sequence of cost best_cost
    std::uint64_t candidates_examined = 0;
    std::uint64_t candidates_admitted = 0;
};

/// Minimum Huffman cost over bounded sequences that are absolutely ordered and
/// have an elongated Huffman tree, compared against the minimizing sequence.
MinimalityResult minimality_search(const SearchBounds& bounds, const OracleLimits& limits = {});

}  // namespace mhuff
