from fractions import Fraction

import pytest

from csgames import catalog_data
from csgames.formulas import (
    PeriodicNumber,
    PowerSeries,
    QuasiPolynomial,
    catalog_entries,
    catalog_eval,
    dyck_f,
    fibonacci,
    mb_brute_force,
    mb_count,
    quasi_params,
    quasi_polynomial,
    series_coefficient,
)


# ---------------------------------------------------------------------------
# periodic numbers / quasi-polynomials
# ---------------------------------------------------------------------------


def test_periodic_eval_convention():
    # first entry applies when n is divisible by the period
    p = PeriodicNumber((Fraction(17, 4), Fraction(4)))
    assert p.eval(2) == Fraction(17, 4)
    assert p.eval(1) == 4
    assert PeriodicNumber((Fraction(0),)).eval(123) == 0


DEMO = QuasiPolynomial(
    (
        PeriodicNumber((Fraction(35, 8),)),
        PeriodicNumber((Fraction(17, 4), Fraction(4))),
        PeriodicNumber((Fraction(1), Fraction(5, 8))),
    )
)


def brute_demo_count(n):
    # dilation of {x1 + x2 <= 3, 2 x1 <= 5, x >= 0} counted directly
    total = 0
    for x1 in range(0, 5 * n // 2 + 1):
        if 2 * x1 > 5 * n:
            continue
        hi = 3 * n - x1
        if hi >= 0:
            total += hi + 1
    return total


def test_demo_quasi_polynomial_against_direct_count():
    # the two evaluation points that pin the indexing convention
    assert brute_demo_count(1) == 9
    assert brute_demo_count(2) == 27
    for n in range(1, 30):
        assert DEMO.eval(n) == brute_demo_count(n)


def test_quasi_degree_period_pretty():
    assert DEMO.degree == 2
    assert DEMO.period == 2
    assert DEMO.pretty() == "35/8*n^2 + [17/4, 4]_n*n + [1, 5/8]_n"


def test_catalog_data_checksum():
    assert catalog_data.checksum() == catalog_data.CHECKSUM


def test_catalog_quasi_shapes():
    shapes = {
        "cs_32": (8, 2),
        "cs_33": (11, 6),
        "cs_34": (14, 6),
        "cs_42": (11, 2),
        "cs_43": (15, 12),
        "cs_52": (14, 2),
    }
    for fid, (degree, period) in shapes.items():
        qp = quasi_polynomial(fid)
        assert (qp.degree, qp.period) == (degree, period)


# ---------------------------------------------------------------------------
# catalog evaluation
# ---------------------------------------------------------------------------


def test_catalog_spot_values():
    assert catalog_eval("cs_2_total", 4) == 15
    assert catalog_eval("cs_2_total", 10) == 839
    assert catalog_eval("cs_2r", 6, r=2) == 40
    assert catalog_eval("cs_2r", 6, r=3) == 1
    assert catalog_eval("cs_21", 6) + 40 + 1 == catalog_eval("cs_2_total", 6)
    assert catalog_eval("cs_t1", 10, t=2) == 165
    assert catalog_eval("cs_t1", 7, t=1) == 7
    assert catalog_eval("cs_32", 6) == 172
    assert catalog_eval("cs_33", 5) == 6
    assert catalog_eval("fib", 10) == 55


def test_catalog_zero_ranges():
    zero = {"cs_32": 3, "cs_33": 4, "cs_34": 5, "cs_42": 4, "cs_43": 4, "cs_52": 5}
    for fid, upto in zero.items():
        for n in range(0, upto + 1):
            assert catalog_eval(fid, n) == 0


def test_quasi_polynomials_vanish_on_their_zero_ranges():
    # the polynomial forms themselves agree with the zero ranges from n >= 2
    for fid, table in catalog_data.QUASI_TABLES.items():
        qp = quasi_polynomial(fid)
        for n in range(2, table["zero_upto"] + 1):
            assert qp.eval(n) == 0, (fid, n)


def test_catalog_rejects_out_of_range():
    with pytest.raises(ValueError):
        catalog_eval("cs_2r", 6, r=1)
    with pytest.raises(ValueError):
        catalog_eval("cs_t1", 5, t=6)
    with pytest.raises(ValueError):
        catalog_eval("cs_2_total", 0)
    with pytest.raises(ValueError):
        catalog_eval("unknown-id", 3)


def test_catalog_integrality_sweep():
    for fid in quasi_params():
        qp = quasi_polynomial(fid)
        for n in range(2, 201):
            assert qp.eval(n).denominator == 1, (fid, n)


def test_catalog_list_carries_validity():
    entries = {e.id: e for e in catalog_entries()}
    assert "cs_32" in entries
    assert "0 for n <= 3" in entries["cs_32"].validity


# frozen spot values beyond the cross-check range, from direct enumeration
FROZEN_ENUMERATED = {
    ("cs_52", 12): 837636,
    ("cs_52", 13): 2499682,
    ("cs_52", 14): 6817888,
    ("cs_34", 11): 77782,
    ("cs_34", 13): 897430,
    ("cs_34", 15): 6964619,
    ("cs_34", 17): 40860867,
    ("cs_43", 12): 4676470,
    ("cs_43", 13): 13930046,
    ("cs_33", 17): 6490082,
}


def test_catalog_frozen_high_values():
    for (fid, n), expected in FROZEN_ENUMERATED.items():
        assert catalog_eval(fid, n) == expected


# ---------------------------------------------------------------------------
# word-pair counts
# ---------------------------------------------------------------------------


def test_dyck_examples():
    assert dyck_f(1) == 0
    assert dyck_f(2, "brute") == 1
    assert dyck_f(3, "brute") == 4


def test_dyck_three_ways():
    for k in range(1, 13):
        closed = dyck_f(k, "closed")
        assert closed == dyck_f(k, "sum") == dyck_f(k, "brute")


def test_dyck_closed_forms_agree_far():
    for k in range(1, 51):
        assert dyck_f(k, "closed") == dyck_f(k, "sum")


def test_dyck_brute_limited():
    with pytest.raises(ValueError):
        dyck_f(15, "brute")


def test_two_row_sum_example():
    assert catalog_eval("sum_t_r2", 4) == 10
    assert catalog_eval("sum_t_r1", 12) == 4095


def test_two_class_total_splits_over_row_counts():
    for n in range(1, 41):
        parts = catalog_eval("cs_21", n)
        r = 2
        while 3 * r - 3 <= n:
            parts += catalog_eval("cs_2r", n, r=r)
            r += 1
        assert parts == catalog_eval("cs_2_total", n)


# ---------------------------------------------------------------------------
# power series
# ---------------------------------------------------------------------------


def test_series_examples():
    assert series_coefficient("r1", 4) == 10
    assert series_coefficient("r_ge_2", 6, r=2) == 40
    assert series_coefficient("cs2_total", 4) == 15


def test_series_rejects_beyond_truncation():
    with pytest.raises(ValueError):
        series_coefficient("r1", 40, order=30)


def test_series_division_exact():
    geom = PowerSeries.monomial(0, 10).divided_by([1, -1])
    assert geom.coeffs == [1] * 11
    fib = PowerSeries.monomial(1, 10).divided_by([1, -1, -1])
    assert fib.coeffs == [fibonacci(k) for k in range(11)]


# ---------------------------------------------------------------------------
# antichain-count formulas for the cube
# ---------------------------------------------------------------------------


def test_mb_formulas_match_brute_force():
    for n in range(0, 5):
        for k in range(0, 4):
            assert mb_count(n, k) == mb_brute_force(n, k)


def test_mb_examples():
    assert mb_count(2, 2) == 1
    assert mb_count(3, 0) == 1
    assert mb_count(1, 1) == 2


def test_mb_brute_limits():
    with pytest.raises(ValueError):
        mb_brute_force(5, 2)
