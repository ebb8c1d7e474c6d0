#include "mhuff/huffman.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace mhuff {

namespace {

void check_arity(unsigned arity) {
    if (arity < 2) throw InvalidInput("arity must be at least 2, got " + std::to_string(arity));
}

}  // namespace

void check_size_congruence(std::size_t n, unsigned arity) {
    check_arity(arity);
    if (n == 0) throw InvalidInput("weight sequence is empty");
    if ((n - 1) % (arity - 1) != 0) {
        throw InvalidInput("n = " + std::to_string(n) + " leaves cannot form a strictly " + std::to_string(arity) +
                           "-ary tree: need (n - 1) mod (m - 1) = 0, but (" + std::to_string(n) + " - 1) mod " +
                           std::to_string(arity - 1) + " = " + std::to_string((n - 1) % (arity - 1)));
    }
}

WeightSequence::WeightSequence(std::vector<Integer> weights, unsigned arity)
    : WeightSequence(std::move(weights), {}, arity) {}

WeightSequence::WeightSequence(std::vector<Integer> weights, std::vector<std::size_t> labels, unsigned arity)
    : weights_(std::move(weights)), labels_(std::move(labels)), arity_(arity) {
    check_size_congruence(weights_.size(), arity_);
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (weights_[k] < 1) {
            throw InvalidInput("weight #" + std::to_string(k) + " is " + weights_[k].str() +
                               "; weights must be positive integers");
        }
        if (k > 0 && weights_[k - 1] > weights_[k]) {
            throw InvalidInput("weights must be non-decreasing: weight #" + std::to_string(k - 1) + " = " +
                               weights_[k - 1].str() + " > weight #" + std::to_string(k) + " = " +
                               weights_[k].str());
        }
    }
    if (labels_.empty()) {
        labels_.resize(weights_.size());
        std::iota(labels_.begin(), labels_.end(), std::size_t{0});
    }
}

WeightSequence WeightSequence::sorted_from(std::vector<Integer> weights, unsigned arity) {
    std::vector<std::size_t> order(weights.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return weights[a] < weights[b]; });
    std::vector<Integer> sorted;
    sorted.reserve(weights.size());
    for (std::size_t k : order) sorted.push_back(weights[k]);
    return WeightSequence(std::move(sorted), std::move(order), arity);
}

MaryTree::MaryTree(unsigned arity, std::vector<Node> nodes, std::size_t root)
    : arity_(arity), nodes_(std::move(nodes)), root_(root) {
    leaf_count_ = static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.is_leaf(); }));
}

MaryTree MaryTree::from_nodes(unsigned arity, std::vector<Node> nodes, std::size_t root) {
    check_arity(arity);
    if (root >= nodes.size()) throw InvalidInput("root id out of range");

    std::vector<bool> seen(nodes.size(), false);
    std::set<std::size_t> labels;
    std::vector<std::size_t> stack{root};
    seen[root] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        std::size_t id = stack.back();
        stack.pop_back();
        ++reached;
        const Node& n = nodes[id];
        if (n.is_leaf()) {
            if (!n.label) throw InvalidInput("leaf " + std::to_string(id) + " has no label");
            if (!labels.insert(*n.label).second) {
                throw InvalidInput("duplicate leaf label " + std::to_string(*n.label));
            }
            if (n.weight < 1) throw InvalidInput("leaf " + std::to_string(id) + " has a non-positive weight");
            continue;
        }
        if (n.label) throw InvalidInput("internal node " + std::to_string(id) + " carries a label");
        if (n.children.size() != arity) {
            throw InvalidInput("internal node " + std::to_string(id) + " has " + std::to_string(n.children.size()) +
                               " children; a strictly " + std::to_string(arity) + "-ary tree needs exactly " +
                               std::to_string(arity));
        }
        Integer sum = 0;
        for (std::size_t child : n.children) {
            if (child >= nodes.size()) throw InvalidInput("child id out of range");
            if (seen[child]) throw InvalidInput("node " + std::to_string(child) + " has more than one parent");
            seen[child] = true;
            sum += nodes[child].weight;
            stack.push_back(child);
        }
        if (sum != n.weight) {
            throw InvalidInput("internal node " + std::to_string(id) + " weight differs from its children's sum");
        }
    }
    if (reached != nodes.size()) throw InvalidInput("tree has nodes unreachable from the root");
    return MaryTree(arity, std::move(nodes), root);
}

std::vector<std::size_t> MaryTree::depths() const {
    std::vector<std::size_t> depth(nodes_.size(), 0);
    std::vector<std::size_t> stack{root_};
    while (!stack.empty()) {
        std::size_t id = stack.back();
        stack.pop_back();
        for (std::size_t child : nodes_[id].children) {
            depth[child] = depth[id] + 1;
            stack.push_back(child);
        }
    }
    return depth;
}

HuffmanResult build_huffman(const WeightSequence& input, TieRule rule) {
    const unsigned m = input.arity();
    const auto& weights = input.weights();

    struct Entry {
        Integer weight;
        std::size_t node;
    };

    std::vector<MaryTree::Node> nodes;
    nodes.reserve(weights.size() + input.internal_count());
    std::vector<Entry> pool;
    pool.reserve(weights.size());
    for (std::size_t k = 0; k < weights.size(); ++k) {
        nodes.push_back({weights[k], input.labels()[k], {}});
        pool.push_back({weights[k], k});
    }

    MergeTrace trace;
    trace.initial = weights;
    while (pool.size() > 1) {
        MaryTree::Node merged;
        merged.weight = 0;
        for (std::size_t k = 0; k < m; ++k) {
            const Entry& e = pool[k];
            merged.weight += e.weight;
            if (!nodes[e.node].is_leaf()) merged.children.push_back(e.node);
        }
        for (std::size_t k = 0; k < m; ++k) {
            if (nodes[pool[k].node].is_leaf()) merged.children.push_back(pool[k].node);
        }
        pool.erase(pool.begin(), pool.begin() + m);

        Entry entry{merged.weight, nodes.size()};
        auto by_weight = [](const Entry& a, const Entry& b) { return a.weight < b.weight; };
        auto at = rule == TieRule::after_equals ? std::upper_bound(pool.begin(), pool.end(), entry, by_weight)
                                                : std::lower_bound(pool.begin(), pool.end(), entry, by_weight);
        pool.insert(at, entry);
        nodes.push_back(std::move(merged));

        MergeStep step;
        step.merged_sum = entry.weight;
        step.sequence.reserve(pool.size());
        for (const Entry& e : pool) step.sequence.push_back(e.weight);
        trace.steps.push_back(std::move(step));
    }

    const std::size_t root = pool.front().node;
    return {MaryTree::from_nodes(m, std::move(nodes), root), std::move(trace)};
}

Integer tree_cost(const MaryTree& tree) {
    const auto depth = tree.depths();
    Integer cost = 0;
    for (std::size_t id = 0; id < tree.nodes().size(); ++id) {
        const auto& n = tree.nodes()[id];
        if (n.is_leaf()) cost += n.weight * depth[id];
    }
    return cost;
}

Integer trace_cost(const MergeTrace& trace) {
    Integer cost = 0;
    for (const auto& step : trace.steps) cost += step.merged_sum;
    return cost;
}

std::map<std::size_t, Codeword> codewords(const MaryTree& tree) {
    std::map<std::size_t, Codeword> out;
    std::vector<std::pair<std::size_t, Codeword>> stack{{tree.root(), {}}};
    while (!stack.empty()) {
        auto [id, word] = std::move(stack.back());
        stack.pop_back();
        const auto& n = tree.node(id);
        if (n.is_leaf()) {
            out.emplace(*n.label, std::move(word));
            continue;
        }
        for (unsigned pos = 0; pos < n.children.size(); ++pos) {
            Codeword next = word;
            next.push_back(pos);
            stack.emplace_back(n.children[pos], std::move(next));
        }
    }
    return out;
}

std::string render_codeword(const Codeword& word, unsigned arity) {
    static constexpr char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::string out;
    if (arity <= 36) {
        for (unsigned d : word) out += digits[d];
        return out;
    }
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k) out += '.';
        out += std::to_string(word[k]);
    }
    return out;
}

OrderingCheck is_absolutely_ordered(const MergeTrace& trace, unsigned arity) {
    const std::size_t steps = trace.step_count();
    for (std::size_t i = 0; i + 2 <= steps; ++i) {
        const auto& seq = trace.sequence(i);
        if (!(seq[arity - 1] < seq[arity])) return {false, i};
    }
    return {};
}

OrderingCheck is_absolutely_ordered(const WeightSequence& input) {
    return is_absolutely_ordered(build_huffman(input).trace, input.arity());
}

bool is_elongated(const MaryTree& tree) {
    for (const auto& n : tree.nodes()) {
        auto internal = std::count_if(n.children.begin(), n.children.end(),
                                      [&](std::size_t c) { return !tree.node(c).is_leaf(); });
        if (internal > 1) return false;
    }
    return true;
}

bool is_left_sided(const MaryTree& tree) {
    if (!is_elongated(tree)) throw std::logic_error("is_left_sided is only defined for elongated trees");
    for (const auto& n : tree.nodes()) {
        for (std::size_t pos = 1; pos < n.children.size(); ++pos) {
            if (!tree.node(n.children[pos]).is_leaf()) return false;
        }
    }
    return true;
}

std::size_t tree_height(const MaryTree& tree) {
    const auto depth = tree.depths();
    return *std::max_element(depth.begin(), depth.end());
}

PaddedWeights pad_to_arity(std::vector<Integer> weights, unsigned arity) {
    check_arity(arity);
    const std::size_t original = weights.size();
    std::size_t dummies = 0;
    if (original == 0) {
        dummies = 1;
    } else if (std::size_t r = (original - 1) % (arity - 1); r != 0) {
        dummies = (arity - 1) - r;
    }
    weights.insert(weights.end(), dummies, Integer(1));
    return {WeightSequence::sorted_from(std::move(weights), arity), original, dummies};
}

}  // namespace mhuff
