"""Acceptance suite: every criterion as one test, one PASS line per check.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-check
lines; ``csgames verify --suite all`` prints the same records.  The
long-running sub-case tally (t=4, r=3) is marked slow.
"""

import pytest

from csgames import acceptance


@pytest.fixture(scope="module", autouse=True)
def _isolated_cache(tmp_path_factory):
    import os

    old = os.environ.get("CSGAMES_CACHE_DIR")
    os.environ["CSGAMES_CACHE_DIR"] = str(tmp_path_factory.mktemp("csgames-cache"))
    yield
    if old is None:
        os.environ.pop("CSGAMES_CACHE_DIR", None)
    else:
        os.environ["CSGAMES_CACHE_DIR"] = old


def _assert_all(results):
    for res in results:
        print(res.line())
    failed = [res for res in results if not res.passed]
    assert not failed, "\n".join(res.line() for res in failed)


def test_01_published_totals():
    _assert_all(acceptance.check_totals(8))


def test_02_engine_equivalence():
    _assert_all(acceptance.check_engine_equivalence(7))


def test_03_two_class_fibonacci_totals():
    _assert_all(acceptance.check_two_class_totals(25))


def test_04_one_row_binomials_and_vertex_count():
    _assert_all(acceptance.check_one_row_counts(12))


def test_05_quasi_polynomials_match_enumeration():
    _assert_all(acceptance.check_quasi_polynomials(11))


def test_06_three_and_four_class_marginals():
    _assert_all(acceptance.check_type_marginals(9))


def test_07_max_row_table_and_realization():
    _assert_all(acceptance.check_max_rows(7))


def test_08_lattice_point_bijections():
    _assert_all(acceptance.check_lattice_bijection(5, 12))


def test_09_subcase_counts_fast():
    _assert_all(acceptance.check_subcase_counts(include_slow=False))


@pytest.mark.slow
def test_09_subcase_counts_slow():
    from csgames.subcases import enumerate_subcases

    for (t, r), expected in acceptance.KNOWN_SUBCASE_COUNTS_SLOW.items():
        got = len(enumerate_subcases(t, r))
        print(f"{'PASS' if got == expected else 'FAIL'} subcase-count t={t} r={r}: {got}")
        assert got == expected


def test_10_subcase_partition():
    _assert_all(acceptance.check_subcase_partition(9))


def test_11_quasi_polynomial_fitting():
    _assert_all(acceptance.check_fitting(23))


def test_12_two_row_totals_and_word_pairs():
    _assert_all(acceptance.check_two_row_totals(8))


def test_13_generating_function_series():
    _assert_all(acceptance.check_series(60, 10))
