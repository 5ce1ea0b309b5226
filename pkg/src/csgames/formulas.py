"""Exact evaluation of every counting formula in the catalog.

Everything here is exact: periodic numbers and quasi-polynomials carry
``fractions.Fraction`` coefficients, power series carry arbitrary-precision
integers below an explicit truncation order, and each catalog entry knows
its validity range and refuses arguments outside it.

Periodic-number indexing: a periodic number ``[f_1, .., f_q]_n`` evaluates
to ``f_((n mod q) + 1)`` (1-based), i.e. the first listed value applies to
``n`` divisible by the period.  This convention is forced by integrality of
the catalog entries and is pinned by dedicated tests; three recorded
verification points are the degree-2 sample polytope at n = 1, 2 and the
3-class/2-row counts at n = 4..6.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations

from . import catalog_data

DEFAULT_SERIES_ORDER = 512

__all__ = [
    "CatalogEntry",
    "PeriodicNumber",
    "PowerSeries",
    "QuasiPolynomial",
    "catalog_entries",
    "catalog_eval",
    "dyck_f",
    "fibonacci",
    "mb_brute_force",
    "quasi_params",
    "quasi_polynomial",
    "series_coefficient",
]


# ---------------------------------------------------------------------------
# Periodic numbers and quasi-polynomials
# ---------------------------------------------------------------------------


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class PeriodicNumber:
    """A rational-valued function of n depending only on ``n mod period``."""

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("a periodic number needs at least one entry")
        object.__setattr__(
            self, "entries", tuple(Fraction(e) for e in self.entries)
        )

    @property
    def period(self) -> int:
        return len(self.entries)

    def eval(self, n: int) -> Fraction:
        return self.entries[n % self.period]

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def __str__(self) -> str:
        if self.period == 1:
            return _fmt(self.entries[0])
        return "[" + ", ".join(_fmt(e) for e in self.entries) + "]_n"


@dataclass(frozen=True)
class QuasiPolynomial:
    """Polynomial in n whose coefficients are periodic numbers.

    ``coefficients`` runs from the leading power of n down to the constant
    term, matching how such formulas are usually written out.
    """

    coefficients: tuple[PeriodicNumber, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("a quasi-polynomial needs at least one coefficient")
        if len(self.coefficients) > 1 and self.coefficients[0].is_zero():
            raise ValueError("leading coefficient must not be identically zero")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def period(self) -> int:
        return reduce(math.lcm, (c.period for c in self.coefficients), 1)

    def eval(self, n: int) -> Fraction:
        acc = Fraction(0)
        for coeff in self.coefficients:
            acc = acc * n + coeff.eval(n)
        return acc

    def eval_int(self, n: int) -> int:
        value = self.eval(n)
        if value.denominator != 1:
            raise ValueError(f"non-integral value {value} at n={n}")
        return value.numerator

    def pretty(self, var: str = "n") -> str:
        pieces = []
        d = self.degree
        for i, coeff in enumerate(self.coefficients):
            negated = coeff.period == 1 and coeff.entries[0] < 0
            text = _fmt(-coeff.entries[0]) if negated else str(coeff)
            power = d - i
            if power == 1:
                text = f"{text}*{var}"
            elif power > 1:
                text = f"{text}*{var}^{power}"
            if not pieces:
                pieces.append(("-" if negated else "") + text)
            else:
                pieces.append(("- " if negated else "+ ") + text)
        return " ".join(pieces)


def quasi_polynomial(table_id: str) -> QuasiPolynomial:
    """The quasi-polynomial stored under ``table_id`` in the data module."""
    table = catalog_data.QUASI_TABLES[table_id]
    coeffs = []
    for entry in table["coefficients"]:
        strs = (entry,) if isinstance(entry, str) else tuple(entry)
        coeffs.append(PeriodicNumber(tuple(Fraction(s) for s in strs)))
    return QuasiPolynomial(tuple(coeffs))


def quasi_params() -> dict[str, tuple[int, int]]:
    """(class count, row count) covered by each stored quasi-polynomial."""
    return dict(catalog_data.QUASI_PARAMS)


# ---------------------------------------------------------------------------
# Small closed forms
# ---------------------------------------------------------------------------


def fibonacci(k: int) -> int:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def cs_one_row(n: int, t: int) -> int:
    """Number of games with one winning row: n for t = 1, C(n+1, 2t-1) else."""
    if t == 1:
        return n
    return _binom(n + 1, 2 * t - 1)


def cs_two_types_one_row(n: int) -> int:
    return (n**3 - n) // 6


def cs_two_types(n: int, r: int) -> int:
    """Two-class games with r >= 2 winning rows, by the binomial double sum."""
    total = 0
    for i in range((n - 3 * r + 3) // 2 + 1):
        total += _binom(i + r - 2, r - 2) * _binom(n - 2 * r - 2 * i + 5, r + 2)
    return total


def cs_two_types_total(n: int) -> int:
    return fibonacci(n + 6) - (n * n + 4 * n + 8)


def dyck_f(k: int, method: str = "closed") -> int:
    """Word pairs behind the two-row totals: length-k 0/1 words u, v with
    u starting 1 and v starting 0, every prefix sum of u at least that of
    v, and equal totals (u and v are the segments of two coalition vectors
    from their first differing position onward).

    ``closed`` evaluates 4/(k+2) * C(2k-1, k-2); ``sum`` the Catalan-number
    sum over the number of differing positions; ``brute`` scans all pairs
    directly (k <= 14).  All three agree.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if method == "closed":
        num = 4 * _binom(2 * k - 1, k - 2)
        q, rem = divmod(num, k + 2)
        if rem:
            raise ArithmeticError(f"closed form not integral at k={k}")
        return q
    if method == "sum":
        total = 0
        for i in range(1, k // 2 + 1):
            catalan = math.comb(2 * i, i) // (i + 1)
            total += catalan * _binom(k - 1, 2 * i - 1) * (1 << (k - 2 * i))
        return total
    if method == "brute":
        if k > 14:
            raise ValueError(f"brute force supported only for k <= 14, got {k}")
        import numpy as np

        words = np.arange(1 << k, dtype=np.int64)
        bits = (words[:, None] >> np.arange(k - 1, -1, -1)) & 1
        pref = np.cumsum(bits, axis=1)
        us = pref[bits[:, 0] == 1]
        vs = pref[bits[:, 0] == 0]
        total = 0
        chunk = 256
        for start in range(0, len(us), chunk):
            u = us[start : start + chunk]
            dominates = (u[:, None, :] >= vs[None, :, :]).all(axis=2)
            equal_total = u[:, None, -1] == vs[None, :, -1]
            total += int(np.count_nonzero(dominates & equal_total))
        return total
    raise ValueError(f"unknown method {method!r}")


def sum_over_types_one_row(n: int) -> int:
    return (1 << n) - 1


def sum_over_types_two_rows(n: int) -> int:
    """Total over all t of games with two winning rows."""
    total = 0
    for i in range(n - 2):
        total += (1 << i) * ((1 << (i + 1)) - 1) * dyck_f(n - i - 1, "closed")
    return total


def mb_count(n: int, k: int) -> int:
    """Antichains of the subset lattice of an n-set with exactly k members."""
    if k == 0:
        return 1
    if k == 1:
        return 1 << n
    if k == 2:
        return (1 << n) * ((1 << n) - 1) // 2 - 3**n + 2**n
    if k == 3:
        return (
            (1 << n) * ((1 << n) - 1) * ((1 << n) - 2) // 6
            - 6**n
            + 5**n
            + 4**n
            - 3**n
        )
    raise ValueError(f"no closed form stored for k={k}")


def mb_brute_force(n: int, k: int) -> int:
    """Oracle for :func:`mb_count`: enumerate k-subsets of the subset lattice."""
    if n > 4 or k > 3:
        raise ValueError(f"brute force limited to n <= 4, k <= 3, got n={n}, k={k}")
    if k == 0:
        return 1
    subsets = range(1 << n)
    count = 0
    for combo in combinations(subsets, k):
        if all(
            (a | b) != a and (a | b) != b for a, b in combinations(combo, 2)
        ):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Formula catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    params: tuple[str, ...]
    validity: str
    description: str

    def __str__(self) -> str:
        args = ", ".join(self.params)
        return f"{self.id}({args}): {self.description} [{self.validity}]"


_CATALOG: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry) -> None:
    _CATALOG[entry.id] = entry


_register(CatalogEntry("cs_t1", ("n", "t"), "1 <= t <= n", "games with one winning row"))
_register(CatalogEntry("cs_21", ("n",), "n >= 1", "two classes, one winning row: (n^3-n)/6"))
_register(CatalogEntry("cs_2r", ("n", "r"), "n >= 1, r >= 2", "two classes, r winning rows"))
_register(
    CatalogEntry("cs_2_total", ("n",), "n >= 1", "all two-class games: Fib(n+6)-(n^2+4n+8)")
)
for _qid, (_t, _r) in catalog_data.QUASI_PARAMS.items():
    _zero = catalog_data.QUASI_TABLES[_qid]["zero_upto"]
    _register(
        CatalogEntry(
            _qid,
            ("n",),
            f"0 for n <= {_zero}, polynomial form for n >= 2",
            f"{_t} classes, {_r} winning rows (quasi-polynomial)",
        )
    )
_register(CatalogEntry("sum_t_r1", ("n",), "n >= 1", "one-row games over all t: 2^n-1"))
_register(
    CatalogEntry("sum_t_r2", ("n",), "n >= 1", "two-row games over all t (double sum)")
)
_register(CatalogEntry("mb_k0", ("n",), "n >= 0", "antichains of the n-cube with 0 members"))
_register(CatalogEntry("mb_k1", ("n",), "n >= 0", "antichains with 1 member: 2^n"))
_register(CatalogEntry("mb_k2", ("n",), "n >= 0", "antichains with 2 members"))
_register(CatalogEntry("mb_k3", ("n",), "n >= 0", "antichains with 3 members"))
_register(CatalogEntry("fib", ("n",), "n >= 0", "Fibonacci numbers, Fib(0)=0, Fib(1)=1"))

_QUASI_CACHE: dict[str, QuasiPolynomial] = {}


def _eval_quasi_table(table_id: str, n: int) -> int:
    table = catalog_data.QUASI_TABLES[table_id]
    if n < 0:
        raise ValueError(f"{table_id} needs n >= 0, got {n}")
    if n <= table["zero_upto"]:
        return 0
    qp = _QUASI_CACHE.get(table_id)
    if qp is None:
        qp = _QUASI_CACHE[table_id] = quasi_polynomial(table_id)
    return qp.eval_int(n)


def catalog_entries() -> list[CatalogEntry]:
    return list(_CATALOG.values())


def catalog_eval(formula_id: str, n: int, t: int | None = None, r: int | None = None) -> int:
    """Evaluate a catalog formula exactly; reject out-of-range arguments."""
    if formula_id not in _CATALOG:
        known = ", ".join(sorted(_CATALOG))
        raise ValueError(f"unknown formula id {formula_id!r}; known ids: {known}")
    entry = _CATALOG[formula_id]

    def need(cond: bool) -> None:
        if not cond:
            raise ValueError(
                f"arguments outside the validity range of {formula_id} ({entry.validity})"
            )

    if formula_id == "cs_t1":
        need(t is not None and n >= 1 and 1 <= t <= n)
        return cs_one_row(n, t)
    if formula_id == "cs_21":
        need(n >= 1)
        return cs_two_types_one_row(n)
    if formula_id == "cs_2r":
        need(r is not None and n >= 1 and r >= 2)
        return cs_two_types(n, r)
    if formula_id == "cs_2_total":
        need(n >= 1)
        return cs_two_types_total(n)
    if formula_id in catalog_data.QUASI_TABLES:
        need(n >= 0)
        return _eval_quasi_table(formula_id, n)
    if formula_id == "sum_t_r1":
        need(n >= 1)
        return sum_over_types_one_row(n)
    if formula_id == "sum_t_r2":
        need(n >= 1)
        return sum_over_types_two_rows(n)
    if formula_id.startswith("mb_k"):
        need(n >= 0)
        return mb_count(n, int(formula_id[4:]))
    if formula_id == "fib":
        need(n >= 0)
        return fibonacci(n)
    raise AssertionError(f"unhandled formula id {formula_id}")


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------


class PowerSeries:
    """Dense integer power series, exact up to an explicit truncation order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: list[int]):
        self.coeffs = list(coeffs)

    @classmethod
    def monomial(cls, k: int, order: int) -> "PowerSeries":
        coeffs = [0] * (order + 1)
        if k <= order:
            coeffs[k] = 1
        return cls(coeffs)

    @classmethod
    def from_poly(cls, poly: list[int], order: int) -> "PowerSeries":
        coeffs = [0] * (order + 1)
        for i, c in enumerate(poly[: order + 1]):
            coeffs[i] = c
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if not 0 <= k <= self.order:
            raise ValueError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def divided_by(self, divisor: list[int]) -> "PowerSeries":
        """Divide by a polynomial with constant term 1 (exact recurrence)."""
        if not divisor or divisor[0] != 1:
            raise ValueError("divisor must have constant term 1")
        out = [0] * len(self.coeffs)
        tail = divisor[1:]
        for i in range(len(self.coeffs)):
            acc = self.coeffs[i]
            for j, d in enumerate(tail, start=1):
                if d and j <= i:
                    acc -= d * out[i - j]
            out[i] = acc
        return PowerSeries(out)


_SERIES_CACHE: dict[tuple, PowerSeries] = {}


def _series(kind: str, r: int | None, order: int) -> PowerSeries:
    key = (kind, r, order)
    cached = _SERIES_CACHE.get(key)
    if cached is not None:
        return cached
    if kind == "r1":
        s = PowerSeries.monomial(2, order)
        for _ in range(4):
            s = s.divided_by([1, -1])
    elif kind == "r_ge_2":
        assert r is not None and r >= 2
        s = PowerSeries.monomial(3 * r - 3, order)
        for _ in range(r + 3):
            s = s.divided_by([1, -1])
        for _ in range(r - 1):
            s = s.divided_by([1, 0, -1])
    elif kind == "cs2_total":
        s = PowerSeries.from_poly([0, 0, 1, 1], order)
        for _ in range(3):
            s = s.divided_by([1, -1])
        s = s.divided_by([1, -1, -1])
    else:
        raise ValueError(f"unknown series kind {kind!r}")
    _SERIES_CACHE[key] = s
    return s


def series_coefficient(
    kind: str, n: int, r: int | None = None, order: int = DEFAULT_SERIES_ORDER
) -> int:
    """Coefficient of x^n in one of the catalog generating functions.

    ``r1``: x^2/(1-x)^4.  ``r_ge_2``: x^(3r-3)/((1-x)^(r+3)(1-x^2)^(r-1)).
    ``cs2_total``: x^2(1+x)/((1-x)^3(1-x-x^2)).
    """
    if kind == "r_ge_2" and (r is None or r < 2):
        raise ValueError("kind 'r_ge_2' needs r >= 2")
    if kind != "r_ge_2":
        r = None
    if not 0 <= n <= order:
        raise ValueError(f"n={n} beyond the truncation order {order}")
    return _series(kind, r, order).coefficient(n)
