"""Case-split machinery replacing the big-M logic by disjoint linear systems.

For fixed (t, r), every valid winning matrix falls into exactly one
sub-case described by index tuples:

* per row pair i < j, the first position ``a_ij`` where the prefix sums of
  the two rows differ (row i larger there) and the first later position
  ``b_ij`` where row j's prefix sum wins;
* per column j < t, the first row ``c_j`` witnessing the column condition,
  with a base-3 digit string ``d_j`` recording how each earlier row fails
  it (0: zero entry, next column open; 1: positive entry, next column
  full; 2: zero entry, next column full).

Fixing a tuple turns all validity properties into plain linear
(in)equalities over the game variables, so lattice-point counts per tuple
partition the game count.  Tuples are generated by a pruned tree search:
monotonicity of the ``a``'s, rational feasibility of the partial system,
and finally certification by an actual integer point with at most
``3 * (t + r)`` voters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .core import TypedGame
from .errors import ResourceLimitError
from .polytope import (
    RationalLinearSystem,
    find_lattice_point,
    is_rationally_feasible,
)

__all__ = [
    "SubcaseTuple",
    "classify_game",
    "default_probe_voters",
    "enumerate_subcases",
    "format_subcase",
    "parse_subcase",
    "subcase_system",
]


def row_pairs(r: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1)]


def base3_digits(d: int, length: int) -> tuple[int, ...]:
    digits = []
    for _ in range(length):
        digits.append(d % 3)
        d //= 3
    return tuple(digits)


@dataclass(frozen=True)
class SubcaseTuple:
    """One sub-case: (a, b) per row pair in pair order, (c, d) per column."""

    t: int
    r: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    d: tuple[int, ...]

    def __post_init__(self) -> None:
        pairs = row_pairs(self.r)
        if len(self.a) != len(pairs) or len(self.b) != len(pairs):
            raise ValueError(f"need {len(pairs)} a- and b-entries for r={self.r}")
        if len(self.c) != self.t - 1 or len(self.d) != self.t - 1:
            raise ValueError(f"need {self.t - 1} c- and d-entries for t={self.t}")
        for (i, j), aij, bij in zip(pairs, self.a, self.b):
            if not 1 <= aij < bij <= self.t:
                raise ValueError(f"pair ({i},{j}): need 1 <= a < b <= t, got a={aij}, b={bij}")
        # first-difference indices are ultrametric: for rows x > y > z (lex),
        # lexdiff(x,z) = min(lexdiff(x,y), lexdiff(y,z)); hence a_(i,j) is
        # non-increasing in j for fixed i and non-decreasing in i for fixed j
        amap = dict(zip(pairs, self.a))
        for (i, j), aij in amap.items():
            for (i2, j2), a2 in amap.items():
                if i2 == i and j < j2 and aij < a2:
                    raise ValueError(f"a_({i},{j}) < a_({i2},{j2}) breaks monotonicity")
                if j2 == j and i < i2 and aij > a2:
                    raise ValueError(f"a_({i},{j}) > a_({i2},{j2}) breaks monotonicity")
        for j, (cj, dj) in enumerate(zip(self.c, self.d), start=1):
            if not 1 <= cj <= self.r:
                raise ValueError(f"c_{j} must lie in 1..r")
            if not 0 <= dj < 3 ** (cj - 1):
                raise ValueError(f"d_{j} must lie in 0..3^(c_{j}-1)-1")

    def pair_index(self) -> dict[tuple[int, int], int]:
        return {pq: k for k, pq in enumerate(row_pairs(self.r))}

    def digits(self, j: int) -> tuple[int, ...]:
        """Failure digits for rows 1..c_j-1 of column j (1-based column)."""
        return base3_digits(self.d[j - 1], self.c[j - 1] - 1)

    def sort_key(self) -> tuple:
        return (self.a, self.b, self.c, self.d)


def format_subcase(tp: SubcaseTuple) -> str:
    pairs = row_pairs(tp.r)
    a = ",".join(f"({i},{j}):{v}" for (i, j), v in zip(pairs, tp.a))
    b = ",".join(f"({i},{j}):{v}" for (i, j), v in zip(pairs, tp.b))
    c = ",".join(str(v) for v in tp.c)
    d = ",".join(str(v) for v in tp.d)
    return f"a=[{a}]; b=[{b}]; c=[{c}]; d=[{d}]"


def parse_subcase(text: str, t: int, r: int) -> SubcaseTuple:
    import re

    m = re.match(r"^a=\[(.*)\]; b=\[(.*)\]; c=\[(.*)\]; d=\[(.*)\]$", text.strip())
    if m is None:
        raise ValueError(f"not a sub-case line: {text!r}")

    def values(body: str) -> tuple[int, ...]:
        if not body:
            return ()
        return tuple(int(part.split(":")[-1]) for part in re.findall(r"\([0-9]+,[0-9]+\):[0-9]+", body))

    def plain(body: str) -> tuple[int, ...]:
        return tuple(int(v) for v in body.split(",")) if body else ()

    return SubcaseTuple(t, r, values(m.group(1)), values(m.group(2)), plain(m.group(3)), plain(m.group(4)))


def subcase_to_json(tp: SubcaseTuple) -> str:
    return json.dumps(
        {"t": tp.t, "r": tp.r, "a": list(tp.a), "b": list(tp.b), "c": list(tp.c), "d": list(tp.d)},
        sort_keys=True,
        separators=(",", ":"),
    )


# ---------------------------------------------------------------------------
# Linear systems
# ---------------------------------------------------------------------------


def _base_system(t: int, r: int, n: int | None, max_total: int | None) -> RationalLinearSystem:
    s = RationalLinearSystem()
    for j in range(1, t + 1):
        upper = None
        if n is not None:
            upper = n - (t - 1)
        elif max_total is not None:
            upper = max_total - (t - 1)
        if upper is not None and upper < 1:
            upper = None  # n < t: propagation will prove the system empty
        s.add_variable(f"n_{j}", 1, upper)
    for i in range(1, r + 1):
        for j in range(1, t + 1):
            s.add_variable(f"m_{i}_{j}", 0, None)
    if n is not None:
        s.add_constraint({f"n_{j}": 1 for j in range(1, t + 1)}, "==", n)
    elif max_total is not None:
        s.add_constraint({f"n_{j}": 1 for j in range(1, t + 1)}, "<=", max_total)
    for i in range(1, r + 1):
        for j in range(1, t + 1):
            s.add_constraint({f"m_{i}_{j}": 1, f"n_{j}": -1}, "<=", 0)
    return s


def _prefix_diff(i: int, j: int, k: int) -> dict[str, int]:
    d: dict[str, int] = {}
    for h in range(1, k + 1):
        d[f"m_{i}_{h}"] = 1
        d[f"m_{j}_{h}"] = -1
    return d


def _add_pair_constraints(
    s: RationalLinearSystem, i: int, j: int, a: int, b: int | None
) -> None:
    # prefix sums agree strictly below a and row i wins at a (strictness as
    # +-1 offsets, exact for integer points)
    for k in range(1, a):
        s.add_constraint(_prefix_diff(i, j, k), "==", 0)
    s.add_constraint(_prefix_diff(i, j, a), ">=", 1)
    if b is not None:
        for k in range(a + 1, b):
            s.add_constraint(_prefix_diff(i, j, k), ">=", 0)
        s.add_constraint(_prefix_diff(i, j, b), "<=", -1)


def _add_column_constraints(
    s: RationalLinearSystem, j: int, c: int, digits: Sequence[int | None]
) -> None:
    s.add_constraint({f"m_{c}_{j}": 1}, ">=", 1)
    s.add_constraint({f"m_{c}_{j+1}": 1, f"n_{j+1}": -1}, "<=", -1)
    for i, digit in enumerate(digits, start=1):
        if digit is None:
            continue
        if digit in (0, 2):
            s.add_constraint({f"m_{i}_{j}": 1}, "<=", 0)
        else:
            s.add_constraint({f"m_{i}_{j}": 1}, ">=", 1)
        if digit in (1, 2):
            s.add_constraint({f"m_{i}_{j+1}": 1, f"n_{j+1}": -1}, "==", 0)
        else:
            s.add_constraint({f"m_{i}_{j+1}": 1, f"n_{j+1}": -1}, "<=", -1)


def subcase_system(
    tp: SubcaseTuple, n: int | None = None, max_total: int | None = None
) -> RationalLinearSystem:
    """The linear system whose integer points are exactly the games of this sub-case.

    With ``n`` given the class sizes must sum to n; otherwise the total is
    free (optionally capped by ``max_total``, which keeps every variable
    bounded for integer search).
    """
    s = _base_system(tp.t, tp.r, n, max_total)
    idx = tp.pair_index()
    for (i, j), k in idx.items():
        _add_pair_constraints(s, i, j, tp.a[k], tp.b[k])
    for j in range(1, tp.t):
        _add_column_constraints(s, j, tp.c[j - 1], tp.digits(j))
    return s


def default_probe_voters(t: int, r: int) -> int:
    return 3 * (t + r)


# ---------------------------------------------------------------------------
# Tuple generation
# ---------------------------------------------------------------------------


class _PartialTuple:
    def __init__(self, t: int, r: int):
        self.t = t
        self.r = r
        self.pairs = row_pairs(r)
        self.a: list[int] = []
        self.b: list[int] = []
        self.c: list[int] = []
        self.digit_lists: list[list[int]] = []

    def system(self) -> RationalLinearSystem:
        s = _base_system(self.t, self.r, None, None)
        for k, aij in enumerate(self.a):
            i, j = self.pairs[k]
            bij = self.b[k] if k < len(self.b) else None
            _add_pair_constraints(s, i, j, aij, bij)
        for col, c in enumerate(self.c, start=1):
            digits: list[int | None] = list(self.digit_lists[col - 1])
            digits += [None] * (c - 1 - len(digits))
            _add_column_constraints(s, col, c, digits)
        return s

    def feasible(self) -> bool:
        try:
            return is_rationally_feasible(self.system())
        except ResourceLimitError:
            return True  # never prune on a resource failure


def has_integer_witness(tp: SubcaseTuple, probe_voters: int) -> bool:
    """Is there a game in this sub-case with at most probe_voters voters?

    Tries each voter count from t upward so that the realizable (usually
    small) cases exit early.
    """
    for n in range(tp.t, probe_voters + 1):
        if find_lattice_point(subcase_system(tp, n=n)) is not None:
            return True
    return False


def enumerate_subcases(t: int, r: int, probe_voters: int | None = None) -> list[SubcaseTuple]:
    """All sub-case tuples realized by at least one game, canonically sorted.

    Depth-first assignment in the order: all a's (pair order), all b's,
    then per column c followed by its digits.  Partial assignments are
    pruned by the a-monotonicity law and by rational infeasibility of the
    partial system; surviving tuples are certified by an actual integer
    point with at most ``probe_voters`` voters (default ``3 * (t + r)``).
    """
    if t < 2:
        raise ValueError(f"sub-cases are defined for t >= 2, got t={t}")
    if r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    cap = probe_voters if probe_voters is not None else default_probe_voters(t, r)
    pairs = row_pairs(r)
    out: list[SubcaseTuple] = []
    part = _PartialTuple(t, r)

    def a_monotone(value: int) -> bool:
        k = len(part.a)
        i, j = pairs[k]
        for k2 in range(k):
            i2, j2 = pairs[k2]
            if i2 == i and part.a[k2] < value:
                return False  # a_(i,j) may only shrink as j grows
            if j2 == j and part.a[k2] > value:
                return False  # a_(i,j) may only grow as i grows
        return True

    def fill_a() -> None:
        if len(part.a) == len(pairs):
            fill_b()
            return
        for value in range(1, part.t):
            if not a_monotone(value):
                continue
            part.a.append(value)
            if part.feasible():
                fill_a()
            part.a.pop()

    def fill_b() -> None:
        if len(part.b) == len(pairs):
            fill_columns()
            return
        k = len(part.b)
        for value in range(part.a[k] + 1, part.t + 1):
            part.b.append(value)
            if part.feasible():
                fill_b()
            part.b.pop()

    def fill_columns() -> None:
        if len(part.c) == part.t - 1:
            tp = SubcaseTuple(
                part.t,
                part.r,
                tuple(part.a),
                tuple(part.b),
                tuple(part.c),
                tuple(
                    sum(dig * 3**i for i, dig in enumerate(digs))
                    for digs in part.digit_lists
                ),
            )
            if has_integer_witness(tp, cap):
                out.append(tp)
            return
        for c in range(1, part.r + 1):
            part.c.append(c)
            part.digit_lists.append([])
            if part.feasible():
                fill_digits()
            part.digit_lists.pop()
            part.c.pop()

    def fill_digits() -> None:
        digs = part.digit_lists[-1]
        if len(digs) == part.c[-1] - 1:
            fill_columns()
            return
        for digit in (0, 1, 2):
            digs.append(digit)
            if part.feasible():
                fill_digits()
            digs.pop()

    fill_a() if r > 1 else fill_columns()
    return sorted(out, key=SubcaseTuple.sort_key)


# ---------------------------------------------------------------------------
# Classification of concrete games
# ---------------------------------------------------------------------------


def classify_game(game: TypedGame) -> SubcaseTuple:
    """The unique sub-case tuple whose system the game satisfies."""
    if game.t < 2:
        raise ValueError("classification is defined for games with t >= 2")
    rows = game.matrix
    t, r = game.t, game.r
    prefs = []
    for row in rows:
        acc = 0
        pref = []
        for v in row:
            acc += v
            pref.append(acc)
        prefs.append(pref)
    a_vals, b_vals = [], []
    for i, j in row_pairs(r):
        pi, pj = prefs[i - 1], prefs[j - 1]
        a = next(k for k in range(1, t + 1) if pi[k - 1] != pj[k - 1])
        if pi[a - 1] < pj[a - 1]:
            raise ValueError("rows are not in canonical order")
        b = next(k for k in range(a + 1, t + 1) if pi[k - 1] < pj[k - 1])
        a_vals.append(a)
        b_vals.append(b)
    c_vals, d_vals = [], []
    for j in range(1, t):
        c = next(
            i
            for i in range(1, r + 1)
            if rows[i - 1][j - 1] > 0 and rows[i - 1][j] < game.class_sizes[j]
        )
        d = 0
        for i in range(1, c):
            zero = rows[i - 1][j - 1] == 0
            full = rows[i - 1][j] == game.class_sizes[j]
            digit = (0 if not full else 2) if zero else 1
            d += digit * 3 ** (i - 1)
        c_vals.append(c)
        d_vals.append(d)
    return SubcaseTuple(t, r, tuple(a_vals), tuple(b_vals), tuple(c_vals), tuple(d_vals))
