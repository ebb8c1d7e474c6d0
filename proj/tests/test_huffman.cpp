#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "mhuff/huffman.hpp"

using mhuff::Integer;
using mhuff::WeightSequence;

namespace {

WeightSequence seq(std::vector<Integer> w, unsigned m) { return WeightSequence(std::move(w), m); }

std::vector<Integer> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

// Random sorted sequence of a legal size for arity m.
WeightSequence random_sequence(std::mt19937_64& rng, unsigned m, std::size_t max_internal, int max_weight) {
    const std::size_t N = 1 + rng() % max_internal;
    std::vector<Integer> w(N * (m - 1) + 1);
    for (auto& x : w) x = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_weight));
    std::sort(w.begin(), w.end());
    return seq(std::move(w), m);
}

}  // namespace

TEST_CASE("WeightSequence validation") {
    CHECK_NOTHROW(seq(ints({1, 1, 1, 2, 2, 4, 4}), 3));
    CHECK_NOTHROW(seq(ints({5}), 4));

    SUBCASE("size congruence names n, m and the congruence") {
        try {
            seq(ints({1, 1, 2, 3}), 3);
            FAIL("expected InvalidInput");
        } catch (const mhuff::InvalidInput& e) {
            const std::string msg = e.what();
            CHECK(msg.find("n = 4") != std::string::npos);
            CHECK(msg.find("3-ary") != std::string::npos);
            CHECK(msg.find("(n - 1) mod (m - 1) = 0") != std::string::npos);
        }
    }
    CHECK_THROWS_AS(seq(ints({0, 1}), 2), mhuff::InvalidInput);
    CHECK_THROWS_AS(seq(ints({-3, 1}), 2), mhuff::InvalidInput);
    CHECK_THROWS_AS(seq(ints({2, 1}), 2), mhuff::InvalidInput);
    CHECK_THROWS_AS(seq({}, 2), mhuff::InvalidInput);
    CHECK_THROWS_AS(seq(ints({1, 1}), 1), mhuff::InvalidInput);
}

TEST_CASE("sorted_from records original positions") {
    const auto s = WeightSequence::sorted_from(ints({5, 1, 3, 1, 2}), 2);
    CHECK(s.weights() == ints({1, 1, 2, 3, 5}));
    CHECK(s.labels() == std::vector<std::size_t>{1, 3, 4, 2, 0});
}

TEST_CASE("build_huffman hand-executed trace, ternary") {
    const auto r = mhuff::build_huffman(seq(ints({1, 1, 1, 2, 2, 4, 4}), 3));
    REQUIRE(r.trace.step_count() == 3);
    CHECK(r.trace.sequence(0) == ints({1, 1, 1, 2, 2, 4, 4}));
    CHECK(r.trace.sequence(1) == ints({2, 2, 3, 4, 4}));
    CHECK(r.trace.sequence(2) == ints({4, 4, 7}));
    CHECK(r.trace.sequence(3) == ints({15}));
    CHECK(r.trace.steps[0].merged_sum == 3);
    CHECK(r.trace.steps[1].merged_sum == 7);
    CHECK(r.trace.steps[2].merged_sum == 15);

    CHECK(mhuff::tree_cost(r.tree) == 25);
    CHECK(mhuff::trace_cost(r.trace) == 25);
    CHECK(mhuff::tree_height(r.tree) == 3);
    CHECK(mhuff::is_elongated(r.tree));
    CHECK(mhuff::is_left_sided(r.tree));
    CHECK(r.tree.leaf_count() == 7);
    CHECK(r.tree.internal_count() == 3);
}

TEST_CASE("build_huffman small binary instances") {
    const auto two = mhuff::build_huffman(seq(ints({1, 1}), 2));
    CHECK(two.trace.step_count() == 1);
    CHECK(two.trace.sequence(1) == ints({2}));
    CHECK(mhuff::tree_cost(two.tree) == 2);
    CHECK(mhuff::trace_cost(two.trace) == 2);
    CHECK(mhuff::tree_height(two.tree) == 1);
    const auto words = mhuff::codewords(two.tree);
    CHECK(mhuff::render_codeword(words.at(0), 2) == "0");
    CHECK(mhuff::render_codeword(words.at(1), 2) == "1");

    const auto three = mhuff::build_huffman(seq(ints({1, 1, 2}), 2));
    CHECK(mhuff::tree_cost(three.tree) == 6);
    const auto w3 = mhuff::codewords(three.tree);
    CHECK(w3.at(0).size() == 2);
    CHECK(w3.at(1).size() == 2);
    CHECK(w3.at(2).size() == 1);

    const auto five = mhuff::build_huffman(seq(ints({1, 1, 2, 3, 5}), 2));
    CHECK(mhuff::tree_cost(five.tree) == 25);
    CHECK(mhuff::trace_cost(five.trace) == 25);
    CHECK(mhuff::tree_height(five.tree) == 4);
}

TEST_CASE("single leaf is a zero-cost tree") {
    const auto r = mhuff::build_huffman(seq(ints({7}), 3));
    CHECK(r.trace.step_count() == 0);
    CHECK(mhuff::tree_cost(r.tree) == 0);
    CHECK(mhuff::tree_height(r.tree) == 0);
    CHECK(mhuff::codewords(r.tree).at(0).empty());
}

TEST_CASE("is_absolutely_ordered") {
    CHECK(mhuff::is_absolutely_ordered(seq(ints({1, 1, 1, 2, 2, 4, 4}), 3)));
    const auto flat = mhuff::is_absolutely_ordered(seq(ints({1, 1, 1, 1, 1, 1, 1}), 3));
    CHECK_FALSE(flat);
    REQUIRE(flat.first_violation.has_value());
    CHECK(*flat.first_violation == 0);
    CHECK(mhuff::is_absolutely_ordered(seq(ints({1, 1}), 2)));

    // P^(1) = {2, 2, 2*, 3}: p_2 = p_3 only after the first merge
    const auto later = mhuff::is_absolutely_ordered(seq(ints({1, 1, 2, 2, 3}), 2));
    CHECK_FALSE(later);
    CHECK(*later.first_violation == 1);
}

TEST_CASE("is_elongated and is_left_sided") {
    const auto balanced = mhuff::build_huffman(seq(ints({1, 1, 1, 1}), 2));
    CHECK_FALSE(mhuff::is_elongated(balanced.tree));
    CHECK_THROWS_AS(mhuff::is_left_sided(balanced.tree), std::logic_error);

    const auto pair = mhuff::build_huffman(seq(ints({1, 1}), 2));
    CHECK(mhuff::is_elongated(pair.tree));
    CHECK(mhuff::is_left_sided(pair.tree));

    // root(leaf, internal(leaf, leaf)): elongated, internal child at position 1
    using Node = mhuff::MaryTree::Node;
    std::vector<Node> nodes{
        {1, 0, {}}, {1, 1, {}}, {1, 2, {}}, {2, std::nullopt, {1, 2}}, {3, std::nullopt, {0, 3}},
    };
    const auto manual = mhuff::MaryTree::from_nodes(2, nodes, 4);
    CHECK(mhuff::is_elongated(manual));
    CHECK_FALSE(mhuff::is_left_sided(manual));
    CHECK(mhuff::tree_height(manual) == 2);
    CHECK(mhuff::tree_cost(manual) == 5);
}

TEST_CASE("MaryTree::from_nodes rejects malformed trees") {
    using Node = mhuff::MaryTree::Node;
    // wrong child count
    CHECK_THROWS_AS(mhuff::MaryTree::from_nodes(3, {{1, 0, {}}, {1, 1, {}}, {2, std::nullopt, {0, 1}}}, 2),
                    mhuff::InvalidInput);
    // internal weight is not the sum
    CHECK_THROWS_AS(mhuff::MaryTree::from_nodes(2, {{1, 0, {}}, {1, 1, {}}, {5, std::nullopt, {0, 1}}}, 2),
                    mhuff::InvalidInput);
    // unreachable node
    CHECK_THROWS_AS(
        mhuff::MaryTree::from_nodes(2, {{1, 0, {}}, {1, 1, {}}, {2, std::nullopt, {0, 1}}, {1, 2, {}}}, 2),
        mhuff::InvalidInput);
    // shared child
    CHECK_THROWS_AS(mhuff::MaryTree::from_nodes(2, {{1, 0, {}}, {2, std::nullopt, {0, 0}}}, 1), mhuff::InvalidInput);
    // duplicate labels
    CHECK_THROWS_AS(mhuff::MaryTree::from_nodes(2, {{1, 0, {}}, {1, 0, {}}, {2, std::nullopt, {0, 1}}}, 2),
                    mhuff::InvalidInput);
    std::vector<Node> ok{{1, 0, {}}, {1, 1, {}}, {2, std::nullopt, {0, 1}}};
    CHECK_NOTHROW(mhuff::MaryTree::from_nodes(2, ok, 2));
}

TEST_CASE("codewords follow child positions and exceed ten symbols") {
    std::vector<Integer> w(12, 1);
    const auto r = mhuff::build_huffman(seq(w, 12));
    const auto words = mhuff::codewords(r.tree);
    std::vector<std::string> rendered;
    for (const auto& [label, word] : words) rendered.push_back(mhuff::render_codeword(word, 12));
    CHECK(rendered == std::vector<std::string>{"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "a", "b"});
    CHECK(mhuff::render_codeword({3, 40}, 41) == "3.40");
}

TEST_CASE("pad_to_arity appends unit dummies") {
    const auto p = mhuff::pad_to_arity(ints({4, 1, 3, 2}), 3);
    CHECK(p.dummy_count == 1);
    CHECK(p.sequence.weights() == ints({1, 1, 2, 3, 4}));
    CHECK(p.sequence.labels()[1] == 4);
    CHECK(p.is_dummy(4));
    CHECK_FALSE(p.is_dummy(3));

    const auto none = mhuff::pad_to_arity(ints({1, 1, 1}), 3);
    CHECK(none.dummy_count == 0);
    const auto more = mhuff::pad_to_arity(ints({9, 9}), 4);
    CHECK(more.dummy_count == 2);
    CHECK(more.sequence.size() == 4);
}

TEST_CASE("property: structural invariants on random inputs") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 600; ++round) {
        const unsigned m = 2 + static_cast<unsigned>(rng() % 5);
        const auto input = random_sequence(rng, m, 12, round % 2 ? 6 : 1000);
        const auto r = mhuff::build_huffman(input);
        const auto& tree = r.tree;

        // cost identity
        CHECK(mhuff::tree_cost(tree) == mhuff::trace_cost(r.trace));

        // n = N (m - 1) + 1
        CHECK(tree.leaf_count() == tree.internal_count() * (m - 1) + 1);
        CHECK(tree.internal_count() == input.internal_count());

        // leaf weights are the input multiset
        std::vector<Integer> leaves;
        for (const auto& n : tree.nodes()) {
            if (n.is_leaf()) leaves.push_back(n.weight);
        }
        std::sort(leaves.begin(), leaves.end());
        CHECK(leaves == input.weights());

        // trace shape: |P^(i)| = n - (m-1) i, sorted, last is the total
        const std::size_t n = input.size();
        for (std::size_t i = 0; i <= r.trace.step_count(); ++i) {
            const auto& p = r.trace.sequence(i);
            CHECK(p.size() == n - (m - 1) * i);
            CHECK(std::is_sorted(p.begin(), p.end()));
        }
        Integer total = 0;
        for (const auto& x : input.weights()) total += x;
        CHECK(r.trace.sequence(r.trace.step_count()) == std::vector<Integer>{total});

        // prefix-free code with |codeword| = depth
        const auto words = mhuff::codewords(tree);
        CHECK(words.size() == n);
        std::vector<std::string> rendered;
        for (const auto& [label, word] : words) rendered.push_back(mhuff::render_codeword(word, m));
        std::sort(rendered.begin(), rendered.end());
        for (std::size_t k = 0; k + 1 < rendered.size(); ++k) {
            const auto& a = rendered[k];
            const auto& b = rendered[k + 1];
            CHECK_FALSE(b.compare(0, a.size(), a) == 0);
        }
        const auto depth = tree.depths();
        for (std::size_t id = 0; id < tree.nodes().size(); ++id) {
            const auto& node = tree.nodes()[id];
            if (node.is_leaf()) CHECK(words.at(*node.label).size() == depth[id]);
        }

        // elongated outputs are left-sided and satisfy the 2m-th element bound
        if (mhuff::is_elongated(tree)) {
            CHECK(mhuff::is_left_sided(tree));
            for (std::size_t i = 0; i + 2 <= r.trace.step_count(); ++i) {
                const auto& p = r.trace.sequence(i);
                if (2 * m > p.size()) continue;
                CHECK(r.trace.steps[i].merged_sum <= p[2 * m - 1]);
            }
        }
    }
}

TEST_CASE("property: tie rule does not change the cost") {
    std::mt19937_64 rng(11);
    int with_ties = 0;
    while (with_ties < 300) {
        const unsigned m = 2 + static_cast<unsigned>(rng() % 4);
        const auto input = random_sequence(rng, m, 10, 4);
        const auto& w = input.weights();
        if (std::adjacent_find(w.begin(), w.end()) == w.end()) continue;
        ++with_ties;
        const auto a = mhuff::build_huffman(input, mhuff::TieRule::after_equals);
        const auto b = mhuff::build_huffman(input, mhuff::TieRule::before_equals);
        CHECK(mhuff::tree_cost(a.tree) == mhuff::tree_cost(b.tree));
        CHECK(mhuff::trace_cost(a.trace) == mhuff::trace_cost(b.trace));
    }
}

TEST_CASE("tie rules can produce different shapes with equal cost") {
    // {1,1,2,2}: after_equals pairs the two leaf 2s, before_equals chains the merged 2
    const auto input = seq(ints({1, 1, 2, 2}), 2);
    const auto a = mhuff::build_huffman(input, mhuff::TieRule::after_equals);
    const auto b = mhuff::build_huffman(input, mhuff::TieRule::before_equals);
    CHECK_FALSE(mhuff::is_elongated(a.tree));
    CHECK(mhuff::is_elongated(b.tree));
    CHECK(mhuff::tree_height(a.tree) == 2);
    CHECK(mhuff::tree_height(b.tree) == 3);
    CHECK(mhuff::tree_cost(a.tree) == 12);
    CHECK(mhuff::tree_cost(b.tree) == 12);
}
