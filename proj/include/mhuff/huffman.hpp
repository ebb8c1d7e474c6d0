#pragma once

/**
 * @file huffman.hpp
 * @brief Generalized m-ary Huffman construction over exact integer weights.
 *
 * Each step removes the m smallest entries of the current sorted sequence,
 * merges them into one internal node and inserts the sum back. After
 * N = (n - 1) / (m - 1) steps a single entry (the total weight) remains.
 *
 * Canonical conventions:
 *  - a merged node is inserted after every existing entry of equal weight;
 *  - inside a merge, internal participants take the leftmost child slots and
 *    leaves follow in non-decreasing weight order.
 * With these, elongated outputs are left-sided by construction.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhuff/integer.hpp"

namespace mhuff {

/// Raised for inputs that break the WeightSequence contract.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Non-decreasing positive weights with n = N (m - 1) + 1 for an arity m >= 2.
/// labels()[k] is the caller-visible index of weights()[k]; it is k unless the
/// sequence was produced by sorted_from().
class WeightSequence {
public:
    WeightSequence(std::vector<Integer> weights, unsigned arity);

    /// Sorts (stably) and keeps each weight's original position as its label.
    static WeightSequence sorted_from(std::vector<Integer> weights, unsigned arity);

    const std::vector<Integer>& weights() const noexcept { return weights_; }
    const std::vector<std::size_t>& labels() const noexcept { return labels_; }
    unsigned arity() const noexcept { return arity_; }
    std::size_t size() const noexcept { return weights_.size(); }
    /// N, the number of internal nodes of any strictly m-ary tree on these leaves.
    std::size_t internal_count() const noexcept { return (weights_.size() - 1) / (arity_ - 1); }

private:
    WeightSequence(std::vector<Integer> weights, std::vector<std::size_t> labels, unsigned arity);

    std::vector<Integer> weights_;
    std::vector<std::size_t> labels_;
    unsigned arity_;
};

/// Throws InvalidInput unless (n - 1) is a multiple of (m - 1); the message names n, m and the congruence.
void check_size_congruence(std::size_t n, unsigned arity);

/// Strictly m-ary ordered tree. Leaves carry a weight and a label; internal
/// nodes carry the sum of their subtree and exactly m ordered children.
class MaryTree {
public:
    struct Node {
        Integer weight;
        std::optional<std::size_t> label;  // set on leaves only
        std::vector<std::size_t> children;

        bool is_leaf() const noexcept { return children.empty(); }
    };

    /// Validates the strict m-ary shape, reachability and internal weight sums.
    static MaryTree from_nodes(unsigned arity, std::vector<Node> nodes, std::size_t root);

    unsigned arity() const noexcept { return arity_; }
    const std::vector<Node>& nodes() const noexcept { return nodes_; }
    const Node& node(std::size_t id) const { return nodes_.at(id); }
    std::size_t root() const noexcept { return root_; }
    std::size_t leaf_count() const noexcept { return leaf_count_; }
    std::size_t internal_count() const noexcept { return nodes_.size() - leaf_count_; }

    /// Depth of every node, indexed by node id; the root has depth 0.
    std::vector<std::size_t> depths() const;

private:
    MaryTree(unsigned arity, std::vector<Node> nodes, std::size_t root);

    unsigned arity_;
    std::vector<Node> nodes_;
    std::size_t root_;
    std::size_t leaf_count_ = 0;
};

struct MergeStep {
    std::vector<Integer> sequence;  // P^(i), sorted
    Integer merged_sum;             // sum of the m entries merged to produce P^(i)
};

/// P^(0) plus one record per merge step (P^(1) .. P^(N)).
struct MergeTrace {
    std::vector<Integer> initial;
    std::vector<MergeStep> steps;

    /// P^(i) for i in 0..N.
    const std::vector<Integer>& sequence(std::size_t i) const { return i == 0 ? initial : steps.at(i - 1).sequence; }
    std::size_t step_count() const noexcept { return steps.size(); }
};

/// Where a merged node goes among existing entries of the same weight.
enum class TieRule {
    after_equals,   // canonical
    before_equals,  // alternate, used to check that ties do not change the cost
};

struct HuffmanResult {
    MaryTree tree;
    MergeTrace trace;
};

HuffmanResult build_huffman(const WeightSequence& input, TieRule rule = TieRule::after_equals);

/// Weighted external path length: sum over leaves of depth * weight.
Integer tree_cost(const MaryTree& tree);

/// Sum of all merge sums; equals tree_cost of the companion tree.
Integer trace_cost(const MergeTrace& trace);

using Codeword = std::vector<unsigned>;

/// Root-to-leaf child positions, keyed by leaf label.
std::map<std::size_t, Codeword> codewords(const MaryTree& tree);

/// Digits 0-9 then a-z; arities above 36 fall back to dot-separated numbers.
std::string render_codeword(const Codeword& word, unsigned arity);

struct OrderingCheck {
    bool ordered = true;
    std::optional<std::size_t> first_violation;  // step index i with p_m^(i) >= p_{m+1}^(i)

    explicit operator bool() const noexcept { return ordered; }
};

/// p_m^(i) < p_{m+1}^(i) for every i in 0..N-2 (vacuously true when N <= 1).
OrderingCheck is_absolutely_ordered(const WeightSequence& input);
OrderingCheck is_absolutely_ordered(const MergeTrace& trace, unsigned arity);

/// Every internal node has at most one internal child.
bool is_elongated(const MaryTree& tree);

/// Only child position 0 may be internal. Throws std::logic_error on a non-elongated tree.
bool is_left_sided(const MaryTree& tree);

/// Maximum leaf depth.
std::size_t tree_height(const MaryTree& tree);

/// Weights completed with unit dummies so that the size congruence holds.
/// Dummy labels are >= original_count.
struct PaddedWeights {
    WeightSequence sequence;
    std::size_t original_count;
    std::size_t dummy_count;

    bool is_dummy(std::size_t label) const noexcept { return label >= original_count; }
};

PaddedWeights pad_to_arity(std::vector<Integer> weights, unsigned arity);

}  // namespace mhuff
