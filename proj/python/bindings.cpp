#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mhuff/huffman.hpp"
#include "mhuff/minimizing.hpp"
#include "mhuff/oracle.hpp"
#include "mhuff/polynomial.hpp"

namespace py = pybind11;

// Exact integers cross the boundary as Python ints, via their decimal text.
namespace pybind11::detail {

template <>
struct type_caster<mhuff::Integer> {
    PYBIND11_TYPE_CASTER(mhuff::Integer, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr())) return false;
        const std::string text = py::str(src);
        value = mhuff::parse_integer(text);
        return true;
    }

    static handle cast(const mhuff::Integer& v, return_value_policy, handle) {
        const std::string text = v.str();
        return PyLong_FromString(text.c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

py::dict huffman_report(const std::vector<mhuff::Integer>& weights, unsigned arity, bool alternate_ties) {
    const auto seq = mhuff::WeightSequence::sorted_from(weights, arity);
    const auto built =
        mhuff::build_huffman(seq, alternate_ties ? mhuff::TieRule::before_equals : mhuff::TieRule::after_equals);
    const bool elongated = mhuff::is_elongated(built.tree);
    const auto ordering = mhuff::is_absolutely_ordered(built.trace, arity);

    py::list trace;
    for (std::size_t i = 0; i <= built.trace.step_count(); ++i) trace.append(py::cast(built.trace.sequence(i)));
    py::dict codes;
    for (const auto& [label, word] : mhuff::codewords(built.tree)) {
        codes[py::int_(label)] = mhuff::render_codeword(word, arity);
    }

    py::dict out;
    out["cost"] = mhuff::tree_cost(built.tree);
    out["trace_cost"] = mhuff::trace_cost(built.trace);
    out["height"] = mhuff::tree_height(built.tree);
    out["elongated"] = elongated;
    out["left_sided"] = elongated ? py::object(py::bool_(mhuff::is_left_sided(built.tree))) : py::object(py::none());
    out["absolutely_ordered"] = ordering.ordered;
    out["first_violation"] = ordering.first_violation ? py::object(py::int_(*ordering.first_violation)) : py::none();
    out["trace"] = trace;
    out["codewords"] = codes;
    return out;
}

std::vector<std::vector<mhuff::Integer>> cells(const mhuff::Table& t) { return t.cells; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "m-ary Huffman trees, Fibonacci-like polynomials and minimizing absolutely ordered sequences.";

    py::register_exception<mhuff::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<mhuff::BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    m.def(
        "fibonacci_like_polys",
        [](std::size_t count) {
            std::vector<std::vector<mhuff::Integer>> out;
            for (const auto& p : mhuff::fibonacci_like_polys(count)) out.push_back(p.coeffs());
            return out;
        },
        py::arg("count"), "Coefficient lists (constant term first) of G_0 .. G_{count-1}.");
    m.def(
        "poly_text",
        [](std::size_t i) { return mhuff::fibonacci_like_polys(i + 1).back().to_string(); }, py::arg("i"),
        "Canonical text of G_i(x), highest degree first.");
    m.def(
        "eval_poly",
        [](std::vector<mhuff::Integer> coeffs, const mhuff::Integer& x) {
            return mhuff::eval_poly(mhuff::Polynomial(std::move(coeffs)), x);
        },
        py::arg("coeffs"), py::arg("x"));
    m.def("g_value", &mhuff::g_value, py::arg("i"), py::arg("m"));
    m.def("fibonacci", &mhuff::fibonacci, py::arg("k"), "Fib_k with Fib_1 = Fib_2 = 1.");

    m.def(
        "build_huffman", &huffman_report, py::arg("weights"), py::arg("m"), py::arg("alternate_ties") = false,
        "Builds the m-ary Huffman tree; weights may be unsorted, codewords are keyed by input position.");
    m.def(
        "exhaustive_optimal_cost",
        [](std::vector<mhuff::Integer> weights, unsigned arity, std::size_t max_leaves) {
            mhuff::OracleLimits limits;
            limits.max_leaves = max_leaves;
            return mhuff::exhaustive_optimal_cost(mhuff::WeightSequence::sorted_from(std::move(weights), arity),
                                                  limits);
        },
        py::arg("weights"), py::arg("m"), py::arg("max_leaves") = 9);

    m.def(
        "pmin_abs", [](std::size_t N, unsigned arity) { return mhuff::pmin_abs({N, arity}).weights(); },
        py::arg("N"), py::arg("m"));
    m.def("representative_sequence", &mhuff::representative_sequence, py::arg("m"), py::arg("N"));
    m.def("sum_S", &mhuff::sum_S, py::arg("N"), py::arg("m"));
    m.def(
        "cost_formula", [](std::size_t N, unsigned arity) { return mhuff::cost_formula({N, arity}); }, py::arg("N"),
        py::arg("m"));
    m.def("binary_cost_special_case", &mhuff::binary_cost_special_case, py::arg("N"));
    m.def(
        "cost_report",
        [](std::size_t N, unsigned arity) {
            const auto r = mhuff::cost_report({N, arity});
            py::dict out;
            out["sequence"] = r.sequence.weights();
            out["formula_cost"] = r.formula_cost;
            out["constructed_cost"] = r.constructed_cost;
            out["agreement"] = r.agreement;
            out["absolutely_ordered"] = r.absolutely_ordered;
            out["elongated"] = r.elongated;
            out["left_sided"] = r.left_sided;
            out["height"] = r.height;
            return out;
        },
        py::arg("N"), py::arg("m"));

    m.def(
        "emit_table1", [](unsigned max_m, std::size_t max_i) { return cells(mhuff::emit_table1(max_m, max_i)); },
        py::arg("max_m") = 15, py::arg("max_i") = 13);
    m.def(
        "emit_table2", [](unsigned max_arity, std::size_t max_N) { return cells(mhuff::emit_table2(max_arity, max_N)); },
        py::arg("max_arity") = 21, py::arg("max_N") = 10);

    m.def(
        "minimality_search",
        [](unsigned arity, std::size_t N, std::uint64_t max_weight, std::uint64_t budget) {
            mhuff::OracleLimits limits;
            limits.candidate_budget = budget;
            const auto r = mhuff::minimality_search({arity, N, max_weight}, limits);
            py::dict out;
            out["best_sequence"] = r.best_sequence;
            out["best_cost"] = r.best_cost;
            out["pmin_cost"] = r.pmin_cost;
            out["matches_pmin"] = r.matches_pmin;
            out["tied_sequences"] = r.tied_sequences;
            out["candidates_examined"] = r.candidates_examined;
            return out;
        },
        py::arg("m"), py::arg("N"), py::arg("max_weight"), py::arg("budget") = 10'000'000);
    m.def(
        "max_height_check", [](unsigned arity, std::size_t n) { return mhuff::max_height_check(arity, n); },
        py::arg("m"), py::arg("n"));
}
