import pytest

import mhuff


def test_polynomials():
    polys = mhuff.fibonacci_like_polys(8)
    assert polys[3] == [2, 1]
    assert polys[7] == [2, 9, 9, 1]
    assert mhuff.poly_text(20).startswith("11x^9 + 210x^8")
    assert mhuff.eval_poly(polys[7], 3) == 137
    assert mhuff.g_value(12, 15) == 8168687
    assert mhuff.fibonacci(10) == 55


def test_exact_big_integers():
    x = 10**40 + 7
    assert mhuff.g_value(3, x) == x + 2
    assert mhuff.cost_formula(60, 40) > 2**100


def test_huffman():
    r = mhuff.build_huffman([1, 1, 1, 2, 2, 4, 4], 3)
    assert r["cost"] == 25 == r["trace_cost"]
    assert r["trace"][1:] == [[2, 2, 3, 4, 4], [4, 4, 7], [15]]
    assert r["elongated"] and r["left_sided"] and r["absolutely_ordered"]
    codes = mhuff.build_huffman([5, 1, 1], 2)["codewords"]
    assert codes == {0: "1", 1: "00", 2: "01"}
    with pytest.raises(ValueError, match="n = 4"):
        mhuff.build_huffman([1, 1, 2, 3], 3)
    with pytest.raises(mhuff.InvalidInput):
        mhuff.build_huffman([0, 1], 2)


def test_minimizing_sequences():
    assert mhuff.pmin_abs(3, 3) == [1, 1, 1, 2, 2, 4, 4]
    assert mhuff.representative_sequence(3, 7) == [1, 1, 2, 5, 11, 26, 59, 137]
    assert mhuff.sum_S(3, 2) == 8
    assert mhuff.cost_formula(10, 21) == 39571610
    assert mhuff.binary_cost_special_case(10) == 595
    report = mhuff.cost_report(8, 5)
    assert report["formula_cost"] == report["constructed_cost"] == 6712


def test_tables():
    t1 = mhuff.emit_table1()
    assert len(t1) == 15 and len(t1[0]) == 14
    assert t1[14][13] == 37700417
    t2 = mhuff.emit_table2()
    assert len(t2) == 20 and t2[19][9] == 39571610
    assert mhuff.emit_table2(2, 3) == [[2, 6, 13]]


def test_oracles():
    assert mhuff.exhaustive_optimal_cost([1, 1, 2, 3, 5], 2) == 25
    r = mhuff.minimality_search(2, 3, 4)
    assert r["best_cost"] == 13 and r["matches_pmin"]
    assert mhuff.max_height_check(3, 7)
    with pytest.raises(mhuff.BudgetExceeded):
        mhuff.minimality_search(3, 3, 5, budget=10)
