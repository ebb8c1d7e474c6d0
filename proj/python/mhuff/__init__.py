"""m-ary Huffman trees, Fibonacci-like polynomials and minimizing weight sequences."""

from ._core import (
    BudgetExceeded,
    InvalidInput,
    binary_cost_special_case,
    build_huffman,
    cost_formula,
    cost_report,
    emit_table1,
    emit_table2,
    eval_poly,
    exhaustive_optimal_cost,
    fibonacci,
    fibonacci_like_polys,
    g_value,
    max_height_check,
    minimality_search,
    pmin_abs,
    poly_text,
    representative_sequence,
    sum_S,
)

__all__ = [
    "BudgetExceeded",
    "InvalidInput",
    "binary_cost_special_case",
    "build_huffman",
    "cost_formula",
    "cost_report",
    "emit_table1",
    "emit_table2",
    "eval_poly",
    "exhaustive_optimal_cost",
    "fibonacci",
    "fibonacci_like_polys",
    "g_value",
    "max_height_check",
    "minimality_search",
    "pmin_abs",
    "poly_text",
    "representative_sequence",
    "sum_S",
]
