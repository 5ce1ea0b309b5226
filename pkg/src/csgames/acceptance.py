"""Mechanized cross-check suites: every headline number, two ways.

Each check function returns :class:`CheckResult` records; a check passes
only on exact agreement.  ``csgames verify --suite all`` runs everything
and the pytest acceptance module asserts the same records, so there is a
single source of truth for what "verified" means.

Known reference values quoted here (total counts, marginals by class
count, the sub-case tally, the maximal row counts) are published results
for this family of games; everything else is engine-vs-engine or
engine-vs-formula agreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import ehrhart, formulas, subcases
from .core import max_shift_minimal
from .enumeration import count_all_games, count_typed, enumerate_typed
from .polytope import build_bigm, build_compact_t2, count_lattice_points

# Published reference data.
KNOWN_TOTALS = {1: 1, 2: 3, 3: 8, 4: 25, 5: 117, 6: 1171, 7: 44313, 8: 16175188}
KNOWN_MAX_ROWS = [1, 1, 2, 2, 3, 5, 8, 14, 23, 40, 70, 124, 221, 397, 722]
KNOWN_CS3 = [0, 0, 0, 6, 50, 262, 1114, 4278, 15769]  # n = 1..9
KNOWN_CS4 = [0, 0, 0, 0, 24, 426, 4769, 45483, 431440]  # n = 1..9
KNOWN_SUBCASE_COUNTS = {(3, 2): 9, (3, 3): 46, (3, 4): 254, (4, 2): 49, (5, 2): 217}
KNOWN_SUBCASE_COUNTS_SLOW = {(4, 3): 1071}


@dataclass(frozen=True)
class CheckResult:
    criterion: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.criterion}: {self.detail}"


def _result(criterion: str, expected, actual) -> CheckResult:
    if expected == actual:
        return CheckResult(criterion, True, f"{actual}")
    return CheckResult(criterion, False, f"expected {expected}, got {actual}")


# -- 1 ----------------------------------------------------------------------


def check_totals(limit: int = 8) -> list[CheckResult]:
    """Antichain-engine totals against the published table."""
    out = []
    for n in range(1, limit + 1):
        out.append(_result(f"total-count n={n}", KNOWN_TOTALS[n], count_all_games(n)))
    return out


# -- 2 ----------------------------------------------------------------------


def check_engine_equivalence(limit: int = 7) -> list[CheckResult]:
    """Typed-engine totals equal antichain-engine totals."""
    out = []
    for n in range(1, limit + 1):
        typed = sum(count_typed(n, t) for t in range(1, n + 1))
        out.append(_result(f"engine-equivalence n={n}", count_all_games(n), typed))
    return out


# -- 3 ----------------------------------------------------------------------


def check_two_class_totals(limit: int = 25) -> list[CheckResult]:
    """Typed-engine two-class counts against the Fibonacci closed form."""
    out = []
    for n in range(1, limit + 1):
        expected = formulas.cs_two_types_total(n)
        got = count_typed(n, 2) if n >= 2 else 0
        out.append(_result(f"two-class-total n={n}", expected, got))
    return out


# -- 4 ----------------------------------------------------------------------


def check_one_row_counts(limit: int = 12) -> list[CheckResult]:
    out = []
    for n in range(1, limit + 1):
        for t in range(2, n + 1):
            expected = formulas.cs_one_row(n, t)
            got = count_typed(n, t, 1)
            if expected != got:
                out.append(_result(f"one-row n={n} t={t}", expected, got))
    out.append(CheckResult("one-row binomials n<=12", not out, "all C(n+1,2t-1) match"))
    eq = []
    for n in range(1, limit + 1):
        total = sum(count_typed(n, t, 1) for t in range(1, n + 1))
        if total != 2**n - 1:
            eq.append((n, total))
    out.append(_result("one-row totals 2^n-1 n<=12", [], eq))
    return out


# -- 5 ----------------------------------------------------------------------


def check_quasi_polynomials(limit: int = 11) -> list[CheckResult]:
    """Catalog quasi-polynomials equal typed-engine counts for n <= limit."""
    out = []
    spot = {
        ("cs_32", 4): 5,
        ("cs_32", 5): 38,
        ("cs_32", 6): 172,
        ("cs_33", 5): 6,
    }
    for (fid, n), expected in spot.items():
        out.append(_result(f"{fid} spot n={n}", expected, formulas.catalog_eval(fid, n)))
    for fid, (t, r) in sorted(formulas.quasi_params().items()):
        bad = []
        for n in range(2, limit + 1):
            expected = count_typed(n, t, r) if t <= n else 0
            got = formulas.catalog_eval(fid, n)
            if expected != got:
                bad.append((n, expected, got))
        out.append(_result(f"{fid} vs enumeration n<={limit}", [], bad))
    return out


# -- 6 ----------------------------------------------------------------------


def check_type_marginals(limit: int = 9) -> list[CheckResult]:
    out = []
    for n in range(1, limit + 1):
        got3 = count_typed(n, 3) if n >= 3 else 0
        out.append(_result(f"three-class marginal n={n}", KNOWN_CS3[n - 1], got3))
    for n in range(1, limit + 1):
        got4 = count_typed(n, 4) if n >= 4 else 0
        out.append(_result(f"four-class marginal n={n}", KNOWN_CS4[n - 1], got4))
    return out


# -- 7 ----------------------------------------------------------------------


def check_max_rows(enum_limit: int = 7) -> list[CheckResult]:
    out = []
    got = [max_shift_minimal(n) for n in range(1, 16)]
    out.append(_result("max-rows table n=1..15", KNOWN_MAX_ROWS, got))
    for n in range(1, enum_limit + 1):
        realized = 0
        for t in range(1, n + 1):
            for game in enumerate_typed(n, t):
                if game.r > realized:
                    realized = game.r
        out.append(_result(f"max-rows realized n={n}", max_shift_minimal(n), realized))
    return out


# -- 8 ----------------------------------------------------------------------


def check_lattice_bijection(n_limit: int = 5, compact_n_limit: int = 12) -> list[CheckResult]:
    out = []
    bad = []
    for n in range(1, n_limit + 1):
        for t in range(1, n + 1):
            for r in range(1, max_shift_minimal(n) + 1):
                if t + r <= 2:
                    continue
                lattice = count_lattice_points(build_bigm(n, t, r))
                typed = count_typed(n, t, r)
                if lattice != typed:
                    bad.append((n, t, r, lattice, typed))
    out.append(_result(f"big-M bijection n<={n_limit}", [], bad))
    bad = []
    for n in range(2, compact_n_limit + 1):
        for r in range(1, 5):
            lattice = count_lattice_points(build_compact_t2(n, r))
            expected = (
                formulas.cs_two_types_one_row(n) if r == 1 else formulas.cs_two_types(n, r)
            )
            if lattice != expected:
                bad.append((n, r, lattice, expected))
    out.append(_result(f"compact two-class counts n<={compact_n_limit}", [], bad))
    return out


# -- 9 ----------------------------------------------------------------------


def check_subcase_counts(include_slow: bool = False) -> list[CheckResult]:
    out = []
    table = dict(KNOWN_SUBCASE_COUNTS)
    if include_slow:
        table.update(KNOWN_SUBCASE_COUNTS_SLOW)
    for (t, r), expected in sorted(table.items()):
        got = len(subcases.enumerate_subcases(t, r))
        out.append(_result(f"subcase-count t={t} r={r}", expected, got))
    return out


def check_subcase_counts_slow() -> list[CheckResult]:
    out = []
    for (t, r), expected in sorted(KNOWN_SUBCASE_COUNTS_SLOW.items()):
        got = len(subcases.enumerate_subcases(t, r))
        out.append(_result(f"subcase-count t={t} r={r}", expected, got))
    return out


# -- 10 ---------------------------------------------------------------------


def check_subcase_partition(n_limit: int = 9) -> list[CheckResult]:
    out = []
    for t, r in ((3, 2), (3, 3), (4, 2)):
        tuples = subcases.enumerate_subcases(t, r)
        bad = []
        for n in range(2, n_limit + 1):
            per_tuple = {
                tp.sort_key(): count_lattice_points(subcases.subcase_system(tp, n=n))
                for tp in tuples
            }
            expected = count_typed(n, t, r) if t <= n else 0
            if sum(per_tuple.values()) != expected:
                bad.append((n, sum(per_tuple.values()), expected))
                continue
            buckets: dict[tuple, int] = {k: 0 for k in per_tuple}
            if t <= n:
                for game in enumerate_typed(n, t, r):
                    key = subcases.classify_game(game).sort_key()
                    if key not in buckets:
                        bad.append((n, "classified outside generated tuples", key))
                        break
                    buckets[key] += 1
                else:
                    if buckets != per_tuple:
                        bad.append((n, "bucket mismatch"))
        out.append(_result(f"subcase-partition t={t} r={r} n<={n_limit}", [], bad))
    return out


# -- 11 ---------------------------------------------------------------------


def check_fitting(sample_hi: int = 23) -> list[CheckResult]:
    out = []
    demo_samples = ehrhart.SampleSet.from_pairs(
        [(n, ehrhart.demo_polytope_count(n)) for n in range(1, 7)], "lattice"
    )
    fitted = ehrhart.fit_quasi_polynomial(demo_samples, 2, 2)
    expected = [
        (Fraction(35, 8),),
        (Fraction(17, 4), Fraction(4)),
        (Fraction(1), Fraction(5, 8)),
    ]
    got = [c.entries for c in fitted.coefficients]
    out.append(_result("demo-polytope fit", expected, got))
    samples = ehrhart.sample_counts(3, 2, range(6, sample_hi + 1))
    fitted32 = ehrhart.fit_quasi_polynomial(samples, 8, 2)
    catalog = formulas.quasi_polynomial("cs_32")
    out.append(
        _result(
            "three-class two-row fit",
            [c.entries for c in catalog.coefficients],
            [c.entries for c in fitted32.coefficients],
        )
    )
    return out


# -- 12 ---------------------------------------------------------------------


def check_two_row_totals(limit: int = 8) -> list[CheckResult]:
    out = []
    bad = []
    for n in range(1, limit + 1):
        expected = formulas.sum_over_types_two_rows(n)
        got = sum(count_typed(n, t, 2) for t in range(2, n + 1)) if n >= 2 else 0
        if expected != got:
            bad.append((n, expected, got))
    out.append(_result(f"two-row totals n<={limit}", [], bad))
    out.append(_result("two-row total n=4", 10, formulas.sum_over_types_two_rows(4)))
    bad = []
    for k in range(1, 15):
        closed = formulas.dyck_f(k, "closed")
        if closed != formulas.dyck_f(k, "sum") or closed != formulas.dyck_f(k, "brute"):
            bad.append(k)
    out.append(_result("word-pair counts three ways k<=14", [], bad))
    bad = [k for k in range(1, 51) if formulas.dyck_f(k, "closed") != formulas.dyck_f(k, "sum")]
    out.append(_result("word-pair closed forms k<=50", [], bad))
    return out


# -- 13 ---------------------------------------------------------------------


def check_series(n_limit: int = 60, r_limit: int = 10) -> list[CheckResult]:
    out = []
    bad = [
        n
        for n in range(0, n_limit + 1)
        if formulas.series_coefficient("r1", n) != formulas.cs_two_types_one_row(n)
    ]
    out.append(_result("series one-row n<=60", [], bad))
    bad = [
        (r, n)
        for r in range(2, r_limit + 1)
        for n in range(0, n_limit + 1)
        if formulas.series_coefficient("r_ge_2", n, r=r) != formulas.cs_two_types(n, r)
    ]
    out.append(_result("series multi-row n<=60 r<=10", [], bad))
    bad = [
        n
        for n in range(1, n_limit + 1)
        if formulas.series_coefficient("cs2_total", n) != formulas.cs_two_types_total(n)
    ]
    out.append(_result("series two-class total n<=60", [], bad))
    return out


SUITES: dict[str, Callable[[], list[CheckResult]]] = {
    "totals": check_totals,
    "engines": check_engine_equivalence,
    "two-class": check_two_class_totals,
    "one-row": check_one_row_counts,
    "quasi": check_quasi_polynomials,
    "marginals": check_type_marginals,
    "max-rows": check_max_rows,
    "lattice": check_lattice_bijection,
    "subcases": check_subcase_counts,
    "subcases-slow": check_subcase_counts_slow,
    "partition": check_subcase_partition,
    "fit": check_fitting,
    "two-row": check_two_row_totals,
    "series": check_series,
}


def run_suite(name: str) -> list[CheckResult]:
    if name == "all":
        results = []
        for suite in SUITES.values():
            results.extend(suite())
        return results
    if name not in SUITES:
        known = ", ".join(["all", *SUITES])
        raise ValueError(f"unknown suite {name!r}; known suites: {known}")
    return SUITES[name]()


def suite_names() -> list[str]:
    return ["all", *SUITES.keys()]
