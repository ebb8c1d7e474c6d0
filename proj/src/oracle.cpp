#include "mhuff/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mhuff/minimizing.hpp"
#include "mhuff/polynomial.hpp"

namespace mhuff {

namespace {

Integer binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Integer out = 1;
    for (std::uint64_t j = 1; j <= k; ++j) out = out * (n - k + j) / j;
    return out;
}

void check_leaf_cap(unsigned arity, std::size_t leaves, const OracleLimits& limits) {
    if (leaves > limits.max_leaves) {
        Integer count = plane_tree_count(arity, leaves);
        throw BudgetExceeded("shape enumeration refused: n = " + std::to_string(leaves) + " exceeds the cap of " +
                                 std::to_string(limits.max_leaves) + " leaves (" + count.str() +
                                 " ordered shapes)",
                             count, Integer(limits.max_leaves));
    }
}

TreeShape combine(const std::vector<const TreeShape*>& children) {
    TreeShape out;
    std::vector<std::string> parts;
    std::size_t internal = 0;
    for (const TreeShape* c : children) {
        parts.push_back(c->canonical);
        for (std::size_t d : c->depths) out.depths.push_back(d + 1);
        out.height = std::max(out.height, c->height + 1);
        out.elongated = out.elongated && c->elongated;
        if (c->canonical != "L") ++internal;
    }
    out.elongated = out.elongated && internal <= 1;
    std::sort(parts.begin(), parts.end());
    out.canonical = "(";
    for (std::size_t k = 0; k < parts.size(); ++k) out.canonical += (k ? "," : "") + parts[k];
    out.canonical += ")";
    std::sort(out.depths.begin(), out.depths.end());
    return out;
}

}  // namespace

Integer plane_tree_count(unsigned arity, std::size_t leaves) {
    check_size_congruence(leaves, arity);
    const std::uint64_t N = (leaves - 1) / (arity - 1);
    return binomial(arity * N, N) / ((arity - 1) * N + 1);
}

std::vector<TreeShape> enumerate_shapes(unsigned arity, std::size_t leaves, const OracleLimits& limits) {
    check_size_congruence(leaves, arity);
    check_leaf_cap(arity, leaves, limits);

    // by_size[k] holds the shapes with 1 + k (m - 1) leaves
    std::vector<std::vector<TreeShape>> by_size{{TreeShape{"L", {0}, 0, true}}};
    const std::size_t target = (leaves - 1) / (arity - 1);
    for (std::size_t k = 1; k <= target; ++k) {
        const std::size_t n = 1 + k * (arity - 1);
        // Flat list of candidate children (size < n) in a fixed order; a
        // non-decreasing index sequence picks each multiset exactly once.
        std::vector<std::pair<std::size_t, const TreeShape*>> pool;
        for (std::size_t s = 0; s < k; ++s) {
            for (const auto& shape : by_size[s]) pool.emplace_back(1 + s * (arity - 1), &shape);
        }
        std::vector<TreeShape> made;
        std::vector<const TreeShape*> chosen;
        std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t remaining) {
            if (chosen.size() == arity) {
                if (remaining == 0) made.push_back(combine(chosen));
                return;
            }
            const std::size_t slots_left = arity - chosen.size();
            for (std::size_t idx = from; idx < pool.size(); ++idx) {
                const std::size_t size = pool[idx].first;
                if (size + (slots_left - 1) > remaining) continue;
                chosen.push_back(pool[idx].second);
                pick(idx, remaining - size);
                chosen.pop_back();
            }
        };
        pick(0, n);
        by_size.push_back(std::move(made));
    }
    return by_size[target];
}

Integer exhaustive_optimal_cost(const WeightSequence& weights, const OracleLimits& limits) {
    const auto shapes = enumerate_shapes(weights.arity(), weights.size(), limits);
    // weights ascending paired with depths descending
    const auto& w = weights.weights();
    Integer best = -1;
    for (const auto& shape : shapes) {
        Integer cost = 0;
        for (std::size_t k = 0; k < w.size(); ++k) cost += w[k] * shape.depths[w.size() - 1 - k];
        if (best < 0 || cost < best) best = cost;
    }
    return best;
}

bool max_height_check(unsigned arity, std::size_t leaves, const OracleLimits& limits) {
    const auto shapes = enumerate_shapes(arity, leaves, limits);
    std::size_t max_height = 0;
    std::size_t elongated_height = 0;
    bool found_elongated = false;
    for (const auto& shape : shapes) {
        max_height = std::max(max_height, shape.height);
        if (shape.elongated) {
            found_elongated = true;
            elongated_height = std::max(elongated_height, shape.height);
        }
    }
    return found_elongated && elongated_height == max_height;
}

Integer SearchBounds::candidate_count() const {
    const std::uint64_t n = leaf_count();
    return binomial(max_weight + n - 1, n);
}

MinimalityResult minimality_search(const SearchBounds& bounds, const OracleLimits& limits) {
    const MinimizingSpec spec(bounds.internal_nodes, bounds.arity);
    const Integer largest = g_value(bounds.internal_nodes, bounds.arity - 1);
    if (Integer(bounds.max_weight) < largest) {
        throw InvalidInput("max_weight " + std::to_string(bounds.max_weight) +
                           " excludes the minimizing sequence, whose largest weight is " + largest.str());
    }
    const Integer count = bounds.candidate_count();
    if (count > limits.candidate_budget) {
        throw BudgetExceeded("minimality search refused: " + count.str() + " candidate sequences exceed the budget of " +
                                 std::to_string(limits.candidate_budget),
                             count, Integer(limits.candidate_budget));
    }

    MinimalityResult result;
    result.best_cost = -1;
    const std::size_t n = bounds.leaf_count();
    std::vector<std::uint64_t> current(n, 1);
    for (;;) {
        ++result.candidates_examined;
        std::vector<Integer> weights(current.begin(), current.end());
        WeightSequence seq(weights, bounds.arity);
        const auto built = build_huffman(seq);
        if (is_absolutely_ordered(built.trace, bounds.arity) && is_elongated(built.tree)) {
            ++result.candidates_admitted;
            Integer cost = tree_cost(built.tree);
            if (result.best_cost < 0 || cost < result.best_cost) {
                result.best_cost = cost;
                result.best_sequence = weights;
                result.tied_sequences.clear();
            }
            if (cost == result.best_cost) result.tied_sequences.push_back(std::move(weights));
        }
        // next non-decreasing sequence in lexicographic order
        std::size_t pos = n;
        while (pos > 0 && current[pos - 1] == bounds.max_weight) --pos;
        if (pos == 0) break;
        ++current[pos - 1];
        std::fill(current.begin() + static_cast<std::ptrdiff_t>(pos), current.end(), current[pos - 1]);
    }

    const WeightSequence pmin = pmin_abs(spec);
    const auto built = build_huffman(pmin);
    result.pmin_cost = tree_cost(built.tree);
    const bool pmin_admitted = is_absolutely_ordered(built.trace, bounds.arity) && is_elongated(built.tree);
    result.matches_pmin = pmin_admitted && result.best_cost >= 0 && result.pmin_cost == result.best_cost;
    return result;
}

}  // namespace mhuff
