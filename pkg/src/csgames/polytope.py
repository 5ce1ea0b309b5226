"""Exact-rational linear systems over integer variables.

The two model builders translate the validity properties of complete
simple games into linear constraints: a compact two-class description, and
a general formulation whose auxiliary 0/1 variables linearize the prefix
comparisons, the column witnesses and the row order via big-M constants
``k = n - t + 1``; each game corresponds to exactly one lattice point of
the latter, so lattice counts equal game counts.

Counting and enumeration run a depth-first search in declared variable
order with interval propagation (bound tightening to a fixpoint) after
every assignment.  Rational feasibility of a relaxation is decided by
Fourier-Motzkin elimination with exact arithmetic; a configurable
constraint ceiling turns blow-ups into a distinct resource failure rather
than a wrong answer.  No floating point is used anywhere in this module.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterator, Mapping, Sequence

from .errors import ResourceLimitError, UnboundedVariableError

DEFAULT_FM_CONSTRAINT_LIMIT = 200_000
DEFAULT_PROPAGATION_LIMIT = 2_000_000

__all__ = [
    "Constraint",
    "RationalLinearSystem",
    "Variable",
    "build_bigm",
    "build_compact_t2",
    "count_lattice_points",
    "enumerate_lattice_points",
    "find_lattice_point",
    "is_rationally_feasible",
]

_RELATIONS = ("<=", "==", ">=")


@dataclass(frozen=True)
class Variable:
    name: str
    lower: int | None = None
    upper: int | None = None

    def __post_init__(self) -> None:
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError(f"variable {self.name}: lower {self.lower} > upper {self.upper}")


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[tuple[str, Fraction], ...]
    relation: str
    rhs: Fraction

    def __str__(self) -> str:
        parts = []
        for name, c in self.coeffs:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            term = name if mag == 1 else f"{mag} {name}"
            parts.append(f"{sign} {term}")
        lhs = " ".join(parts).lstrip("+ ") or "0"
        return f"{lhs} {self.relation} {self.rhs}"


class RationalLinearSystem:
    """A list of integer variables with bounds plus linear (in)equalities.

    Treated as immutable once handed to the solvers; :meth:`extended`
    returns a copy with extra constraints instead of mutating.
    """

    def __init__(self) -> None:
        self.variables: list[Variable] = []
        self._index: dict[str, int] = {}
        self.constraints: list[Constraint] = []

    def add_variable(
        self, name: str, lower: int | None = None, upper: int | None = None
    ) -> None:
        if name in self._index:
            raise ValueError(f"variable {name!r} already declared")
        self._index[name] = len(self.variables)
        self.variables.append(Variable(name, lower, upper))

    def add_constraint(
        self,
        coeffs: Mapping[str, int | Fraction],
        relation: str,
        rhs: int | Fraction,
    ) -> None:
        if relation not in _RELATIONS:
            raise ValueError(f"relation must be one of {_RELATIONS}, got {relation!r}")
        items = []
        for name, c in coeffs.items():
            if name not in self._index:
                raise ValueError(f"constraint references undeclared variable {name!r}")
            c = Fraction(c)
            if c != 0:
                items.append((name, c))
        items.sort(key=lambda nc: self._index[nc[0]])
        self.constraints.append(Constraint(tuple(items), relation, Fraction(rhs)))

    def extended(self, extra: Sequence[tuple[Mapping[str, int | Fraction], str, int | Fraction]]) -> "RationalLinearSystem":
        out = RationalLinearSystem()
        for v in self.variables:
            out.add_variable(v.name, v.lower, v.upper)
        out.constraints = list(self.constraints)
        for coeffs, rel, rhs in extra:
            out.add_constraint(coeffs, rel, rhs)
        return out

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "variables": [
                {"name": v.name, "lower": v.lower, "upper": v.upper}
                for v in self.variables
            ],
            "constraints": [
                {
                    "coeffs": {name: str(c) for name, c in con.coeffs},
                    "relation": con.relation,
                    "rhs": str(con.rhs),
                }
                for con in self.constraints
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: dict) -> "RationalLinearSystem":
        out = cls()
        for v in data["variables"]:
            out.add_variable(v["name"], v["lower"], v["upper"])
        for con in data["constraints"]:
            out.add_constraint(
                {k: Fraction(s) for k, s in con["coeffs"].items()},
                con["relation"],
                Fraction(con["rhs"]),
            )
        return out

    def to_lp_text(self) -> str:
        lines = ["subject to"]
        for i, con in enumerate(self.constraints):
            lines.append(f"  c{i}: {con}")
        lines.append("bounds")
        for v in self.variables:
            lo = "-inf" if v.lower is None else str(v.lower)
            hi = "+inf" if v.upper is None else str(v.upper)
            lines.append(f"  {lo} <= {v.name} <= {hi}")
        lines.append("integers")
        lines.append("  " + " ".join(v.name for v in self.variables))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Compilation to integer form
# ---------------------------------------------------------------------------


def _scaled(con: Constraint, index: dict[str, int]) -> list[tuple[tuple[int, ...], tuple[int, ...], int, str]]:
    """Scale a constraint to integer coefficients; '>=' is flipped to '<='."""
    denom = lcm(con.rhs.denominator, *(c.denominator for _, c in con.coeffs)) if con.coeffs else con.rhs.denominator
    idxs = tuple(index[name] for name, _ in con.coeffs)
    coeffs = tuple(int(c * denom) for _, c in con.coeffs)
    rhs = int(con.rhs * denom)
    if con.relation == "<=":
        return [(idxs, coeffs, rhs, "<=")]
    if con.relation == ">=":
        return [(idxs, tuple(-c for c in coeffs), -rhs, "<=")]
    return [(idxs, coeffs, rhs, "==")]


class _Compiled:
    """Integer-form system: substituted equalities, '<=' rows, bounds."""

    def __init__(self, system: RationalLinearSystem):
        index = {v.name: i for i, v in enumerate(system.variables)}
        self.names = [v.name for v in system.variables]
        nvars = len(self.names)
        lower: list[int | None] = [v.lower for v in system.variables]
        upper: list[int | None] = [v.upper for v in system.variables]

        rows: list[tuple[tuple[int, ...], tuple[int, ...], int]] = []
        equalities: list[tuple[tuple[int, ...], tuple[int, ...], int]] = []
        for con in system.constraints:
            for idxs, coeffs, rhs, rel in _scaled(con, index):
                if rel == "==":
                    equalities.append((idxs, coeffs, rhs))
                else:
                    rows.append((idxs, coeffs, rhs))

        # Substitute equalities with a +-1 coefficient: the solved variable is
        # an integer combination of the others, so integrality is preserved
        # and the search dimension drops.
        subst: dict[int, tuple[dict[int, int], int]] = {}

        def apply_subst(idxs: tuple[int, ...], coeffs: tuple[int, ...], rhs: int):
            acc: dict[int, int] = {}
            const = 0
            for i, c in zip(idxs, coeffs):
                if i in subst:
                    expr, k = subst[i]
                    for j, cj in expr.items():
                        acc[j] = acc.get(j, 0) + c * cj
                    const += c * k
                else:
                    acc[i] = acc.get(i, 0) + c
            acc = {i: c for i, c in acc.items() if c != 0}
            return acc, rhs - const

        pending = list(equalities)
        while pending:
            idxs, coeffs, rhs = pending.pop(0)
            acc, rhs2 = apply_subst(idxs, coeffs, rhs)
            target = next((i for i, c in acc.items() if abs(c) == 1), None)
            if target is None:
                items = sorted(acc.items())
                rows.append((tuple(i for i, _ in items), tuple(c for _, c in items), rhs2))
                rows.append((tuple(i for i, _ in items), tuple(-c for _, c in items), -rhs2))
                continue
            sign = acc[target]
            expr = {j: -c * sign for j, c in acc.items() if j != target}
            const = rhs2 * sign
            # update existing substitutions mentioning the target
            for var, (e, k) in list(subst.items()):
                if target in e:
                    f = e.pop(target)
                    for j, cj in expr.items():
                        e[j] = e.get(j, 0) + f * cj
                    e = {j: c for j, c in e.items() if c != 0}
                    subst[var] = (e, k + f * const)
            subst[target] = (dict(expr), const)
            # bounds of the solved variable become constraints on its expression
            items = sorted(expr.items())
            if upper[target] is not None:
                rows.append((tuple(i for i, _ in items), tuple(c for _, c in items), upper[target] - const))
            if lower[target] is not None:
                rows.append((tuple(i for i, _ in items), tuple(-c for _, c in items), const - lower[target]))
            lower[target] = upper[target] = None

        final_rows = []
        for idxs, coeffs, rhs in rows:
            acc, rhs2 = apply_subst(idxs, coeffs, rhs)
            items = sorted(acc.items())
            if not items:
                if rhs2 < 0:
                    final_rows.append(((), (), -1))  # trivially infeasible marker
                continue
            final_rows.append((tuple(i for i, _ in items), tuple(c for _, c in items), rhs2))

        self.free = [i for i in range(nvars) if i not in subst]
        # after the update loop every substitution references free vars only
        self.subst = subst
        self.rows = final_rows
        self.lower = lower
        self.upper = upper
        self.touching: list[list[int]] = [[] for _ in range(nvars)]
        for ridx, (idxs, _, _) in enumerate(final_rows):
            for i in idxs:
                self.touching[i].append(ridx)


class _Infeasible(Exception):
    pass


class _SearchState:
    def __init__(self, compiled: _Compiled, budget: int):
        self.c = compiled
        self.lo = list(compiled.lower)
        self.hi = list(compiled.upper)
        self.trail: list[tuple[int, bool, int | None]] = []
        self.budget = budget

    def mark(self) -> int:
        return len(self.trail)

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            var, is_lo, old = self.trail.pop()
            if is_lo:
                self.lo[var] = old
            else:
                self.hi[var] = old

    def set_lo(self, var: int, value: int) -> None:
        self.trail.append((var, True, self.lo[var]))
        self.lo[var] = value

    def set_hi(self, var: int, value: int) -> None:
        self.trail.append((var, False, self.hi[var]))
        self.hi[var] = value

    def propagate(self, seed_rows: Sequence[int]) -> None:
        """Tighten bounds to a fixpoint; raise _Infeasible on an empty box.

        Integer arithmetic throughout: for a row sum(a_i x_i) <= b, each
        variable's bound is tightened against the minimal contribution of
        the others.  The per-call tightening budget catches pathological
        walks on systems with missing lower bounds.
        """
        c = self.c
        lo, hi = self.lo, self.hi
        budget = self.budget
        queue = deque(seed_rows)
        queued = set(queue)
        while queue:
            ridx = queue.popleft()  # FIFO: keeps cyclic tighteners from starving the rest
            queued.discard(ridx)
            idxs, coeffs, rhs = c.rows[ridx]
            if not idxs:
                raise _Infeasible
            total = 0
            inf_count = 0
            inf_var = -1
            for i, a in zip(idxs, coeffs):
                b = lo[i] if a > 0 else hi[i]
                if b is None:
                    inf_count += 1
                    inf_var = i
                    if inf_count > 1:
                        break
                else:
                    total += a * b
            if inf_count > 1:
                continue
            if inf_count == 0 and total > rhs:
                raise _Infeasible
            for i, a in zip(idxs, coeffs):
                if inf_count == 1 and i != inf_var:
                    continue
                if a > 0:
                    own = 0 if inf_count else a * lo[i]
                    new_hi = (rhs - total + own) // a
                    if hi[i] is None or new_hi < hi[i]:
                        if lo[i] is not None and new_hi < lo[i]:
                            raise _Infeasible
                        self.set_hi(i, new_hi)
                        budget -= 1
                        if budget <= 0:
                            raise ResourceLimitError(
                                "bound propagation exceeded its tightening budget"
                            )
                        for rr in c.touching[i]:
                            if rr not in queued:
                                queued.add(rr)
                                queue.append(rr)
                else:
                    own = 0 if inf_count else a * hi[i]
                    new_lo = -((rhs - total + own) // -a)
                    if lo[i] is None or new_lo > lo[i]:
                        if hi[i] is not None and new_lo > hi[i]:
                            raise _Infeasible
                        self.set_lo(i, new_lo)
                        budget -= 1
                        if budget <= 0:
                            raise ResourceLimitError(
                                "bound propagation exceeded its tightening budget"
                            )
                        for rr in c.touching[i]:
                            if rr not in queued:
                                queued.add(rr)
                                queue.append(rr)


def _check_assignment_rows(compiled: _Compiled, values: list[int | None]) -> bool:
    for idxs, coeffs, rhs in compiled.rows:
        if sum(a * values[i] for i, a in zip(idxs, coeffs)) > rhs:
            return False
    return True


def _solve_leaf(compiled: _Compiled, state: _SearchState) -> dict[str, int]:
    values: list[int | None] = [None] * len(compiled.names)
    for i in compiled.free:
        values[i] = state.lo[i]
    for var, (expr, const) in compiled.subst.items():
        values[var] = const + sum(c * values[j] for j, c in expr.items())
    return {compiled.names[i]: values[i] for i in range(len(values))}


def _search(
    system: RationalLinearSystem,
    mode: str,
    propagate: bool = True,
    budget: int = DEFAULT_PROPAGATION_LIMIT,
) -> Iterator[dict[str, int]] | int | dict[str, int] | None:
    compiled = _Compiled(system)
    state = _SearchState(compiled, budget)
    try:
        state.propagate(range(len(compiled.rows)))
    except _Infeasible:
        if mode == "count":
            return 0
        if mode == "find":
            return None
        return iter(())
    for i in compiled.free:
        if state.lo[i] is None or state.hi[i] is None:
            raise UnboundedVariableError(compiled.names[i])

    order = compiled.free

    def leaves(pos: int) -> Iterator[dict[str, int]]:
        if pos == len(order):
            if propagate or _check_assignment_rows(compiled, state.lo):
                yield _solve_leaf(compiled, state)
            return
        var = order[pos]
        lo, hi = state.lo[var], state.hi[var]
        for v in range(lo, hi + 1):
            m = state.mark()
            state.set_lo(var, v)
            state.set_hi(var, v)
            ok = True
            if propagate:
                try:
                    state.propagate(compiled.touching[var])
                except _Infeasible:
                    ok = False
            if ok:
                yield from leaves(pos + 1)
            state.undo(m)

    if mode == "iter":
        return leaves(0)
    if mode == "find":
        for sol in leaves(0):
            return sol
        return None
    count = 0
    for _ in leaves(0):
        count += 1
    return count


def count_lattice_points(
    system: RationalLinearSystem, propagate: bool = True
) -> int:
    """Exact number of integer points, by propagated depth-first assignment."""
    return _search(system, "count", propagate)


def enumerate_lattice_points(
    system: RationalLinearSystem, propagate: bool = True
) -> Iterator[dict[str, int]]:
    """Stream every integer point as a name -> value mapping (deterministic order)."""
    return _search(system, "iter", propagate)


def find_lattice_point(system: RationalLinearSystem) -> dict[str, int] | None:
    """First integer point in search order, or None."""
    return _search(system, "find")


def assignment_satisfies(system: RationalLinearSystem, values: Mapping[str, int]) -> bool:
    """Does a full assignment satisfy every bound and constraint?"""
    for v in system.variables:
        x = values[v.name]
        if v.lower is not None and x < v.lower:
            return False
        if v.upper is not None and x > v.upper:
            return False
    for con in system.constraints:
        lhs = sum(c * values[name] for name, c in con.coeffs)
        if con.relation == "<=" and lhs > con.rhs:
            return False
        if con.relation == ">=" and lhs < con.rhs:
            return False
        if con.relation == "==" and lhs != con.rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# Fourier-Motzkin elimination
# ---------------------------------------------------------------------------


def _normalize_row(coeffs: dict[int, int], rhs: int) -> tuple[tuple[tuple[int, int], ...], int] | None:
    items = tuple(sorted((i, c) for i, c in coeffs.items() if c != 0))
    if not items:
        return None if rhs >= 0 else ((), -1)
    g = 0
    for _, c in items:
        g = gcd(g, abs(c))
    g = gcd(g, abs(rhs))
    if g > 1:
        items = tuple((i, c // g) for i, c in items)
        rhs //= g
    return items, rhs


def is_rationally_feasible(
    system: RationalLinearSystem,
    max_constraints: int = DEFAULT_FM_CONSTRAINT_LIMIT,
) -> bool:
    """Is the real relaxation nonempty?  Decided by Fourier-Motzkin.

    Eliminates the variable minimizing (#lower bounds x #upper bounds) at
    each step.  Raises :class:`ResourceLimitError` if the intermediate
    constraint count passes ``max_constraints``; it never returns a wrong
    answer.
    """
    index = {v.name: i for i, v in enumerate(system.variables)}
    rows: set[tuple[tuple[tuple[int, int], ...], int]] = set()

    def add_row(coeffs: dict[int, int], rhs: int) -> bool:
        norm = _normalize_row(coeffs, rhs)
        if norm is None:
            return True
        if not norm[0]:
            return False  # 0 <= negative
        rows.add(norm)
        return True

    for con in system.constraints:
        for idxs, coeffs, rhs, rel in _scaled(con, index):
            pairs = dict(zip(idxs, coeffs))
            if rel == "==":
                if not add_row(dict(pairs), rhs):
                    return False
                if not add_row({i: -c for i, c in pairs.items()}, -rhs):
                    return False
            else:
                if not add_row(pairs, rhs):
                    return False
    for i, v in enumerate(system.variables):
        if v.upper is not None:
            if not add_row({i: 1}, v.upper):
                return False
        if v.lower is not None:
            if not add_row({i: -1}, -v.lower):
                return False

    active = {i for items, _ in rows for i, _ in items}
    while active:
        # greedy: eliminate the variable with the fewest pair combinations
        best, best_score = None, None
        for i in active:
            nup = sum(1 for items, _ in rows if dict(items).get(i, 0) > 0)
            nlo = sum(1 for items, _ in rows if dict(items).get(i, 0) < 0)
            score = nup * nlo
            if best_score is None or score < best_score:
                best, best_score = i, score
        var = best
        uppers, lowers, keep = [], [], set()
        for row in rows:
            items, rhs = row
            c = dict(items).get(var, 0)
            if c > 0:
                uppers.append((dict(items), rhs, c))
            elif c < 0:
                lowers.append((dict(items), rhs, -c))
            else:
                keep.add(row)
        rows = keep
        for ucoef, urhs, a in uppers:
            for lcoef, lrhs, b in lowers:
                merged: dict[int, int] = {}
                for i, c in ucoef.items():
                    merged[i] = merged.get(i, 0) + b * c
                for i, c in lcoef.items():
                    merged[i] = merged.get(i, 0) + a * c
                merged.pop(var, None)
                if not add_row(merged, b * urhs + a * lrhs):
                    return False
                if len(rows) > max_constraints:
                    raise ResourceLimitError(
                        f"Fourier-Motzkin exceeded {max_constraints} constraints"
                    )
        active = {i for items, _ in rows for i, _ in items}
    return True


# ---------------------------------------------------------------------------
# Model builders
# ---------------------------------------------------------------------------


def build_compact_t2(n: int, r: int) -> RationalLinearSystem:
    """Compact two-class model: count of lattice points = game count.

    For one row the column witnesses are explicit bounds; for r >= 2 the
    first column strictly decreases down the rows while the row sums
    strictly increase, which already forces the witnesses.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    s = RationalLinearSystem()
    s.add_variable("n1", 1, n - 1)
    s.add_variable("n2", 1, n - 1)
    for i in range(1, r + 1):
        s.add_variable(f"m_{i}_1", 0, n)
        s.add_variable(f"m_{i}_2", 0, n)
    s.add_constraint({"n1": 1, "n2": 1}, "==", n)
    if r == 1:
        s.add_constraint({"m_1_1": 1}, ">=", 1)
        s.add_constraint({"m_1_1": 1, "n1": -1}, "<=", 0)
        s.add_constraint({"m_1_2": 1, "n2": -1}, "<=", -1)
    else:
        for i in range(1, r + 1):
            s.add_constraint({f"m_{i}_1": 1, "n1": -1}, "<=", 0)
            s.add_constraint({f"m_{i}_2": 1, "n2": -1}, "<=", 0)
        for i in range(1, r):
            s.add_constraint({f"m_{i}_1": 1, f"m_{i+1}_1": -1}, ">=", 1)
            s.add_constraint(
                {f"m_{i}_1": 1, f"m_{i}_2": 1, f"m_{i+1}_1": -1, f"m_{i+1}_2": -1},
                "<=",
                -1,
            )
    return s


def build_bigm(n: int, t: int, r: int) -> RationalLinearSystem:
    """Big-M model of all validity properties for fixed (n, t, r).

    Auxiliary binaries: group 1/2 compare prefix sums of row pairs, groups
    3-5 encode the column witnesses, groups 6-8 the strict lexicographic
    row order; each game extends to exactly one assignment of them.
    Requires t + r > 2 (the single-row one-class case is not modeled).
    """
    if t + r <= 2:
        raise ValueError(f"model requires t + r > 2, got t={t}, r={r}")
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    k = n - t + 1
    s = RationalLinearSystem()
    for j in range(1, t + 1):
        s.add_variable(f"n_{j}", 1, n)
    for i in range(1, r + 1):
        for j in range(1, t + 1):
            s.add_variable(f"m_{i}_{j}", 0, n)
    ordered_pairs = [(p, q) for p in range(1, r + 1) for q in range(1, r + 1) if p != q]
    for p, q in ordered_pairs:
        for j in range(1, t + 1):
            s.add_variable(f"x1_{p}_{q}_{j}", 0, 1)
            s.add_variable(f"x2_{p}_{q}_{j}", 0, 1)
    for i in range(1, r + 1):
        for j in range(1, t):
            s.add_variable(f"x3_{i}_{j}", 0, 1)
            s.add_variable(f"x4_{i}_{j}", 0, 1)
            s.add_variable(f"x5_{i}_{j}", 0, 1)
    for i in range(1, r):
        for j in range(1, t + 1):
            s.add_variable(f"x6_{i}_{i+1}_{j}", 0, 1)
            s.add_variable(f"x7_{i}_{i+1}_{j}", 0, 1)
            s.add_variable(f"x6_{i+1}_{i}_{j}", 0, 1)
            s.add_variable(f"x7_{i+1}_{i}_{j}", 0, 1)
    for i in range(1, r):
        for j in range(1, t + 1):
            s.add_variable(f"x8_{i}_{j}", 0, 1)

    s.add_constraint({f"n_{j}": 1 for j in range(1, t + 1)}, "==", n)
    for i in range(1, r + 1):
        for j in range(1, t + 1):
            s.add_constraint({f"n_{j}": 1, f"m_{i}_{j}": -1}, ">=", 0)

    def prefix(p: int, q: int, j: int) -> dict[str, int]:
        d: dict[str, int] = {}
        for h in range(1, j + 1):
            d[f"m_{p}_{h}"] = d.get(f"m_{p}_{h}", 0) + 1
            d[f"m_{q}_{h}"] = d.get(f"m_{q}_{h}", 0) - 1
        return d

    for p, q in ordered_pairs:
        for j in range(1, t + 1):
            d = prefix(p, q, j)
            s.add_constraint(
                {**d, f"x1_{p}_{q}_{j}": -1, f"x2_{p}_{q}_{j}": n}, ">=", 0
            )
            s.add_constraint({**d, f"x1_{p}_{q}_{j}": -n}, "<=", 0)
            s.add_constraint({f"x1_{p}_{q}_{j}": 1, f"x2_{p}_{q}_{j}": 1}, "==", 1)
        s.add_constraint(
            {f"x1_{p}_{q}_{j}": 1 for j in range(1, t + 1)}, ">=", 1
        )

    for i in range(1, r + 1):
        for j in range(1, t):
            s.add_constraint({f"m_{i}_{j}": 1, f"x3_{i}_{j}": -1}, ">=", 0)
            s.add_constraint({f"x3_{i}_{j}": k, f"m_{i}_{j}": -1}, ">=", 0)
            s.add_constraint({f"m_{i}_{j+1}": 1, f"n_{j+1}": -1, f"x4_{i}_{j}": 1}, "<=", 0)
            s.add_constraint({f"n_{j+1}": 1, f"m_{i}_{j+1}": -1, f"x4_{i}_{j}": -k}, "<=", 0)
            s.add_constraint({f"x5_{i}_{j}": 2, f"x3_{i}_{j}": -1, f"x4_{i}_{j}": -1}, "<=", 0)
            s.add_constraint({f"x5_{i}_{j}": 1, f"x3_{i}_{j}": -1, f"x4_{i}_{j}": -1}, ">=", -1)
    for j in range(1, t):
        s.add_constraint({f"x5_{i}_{j}": 1 for i in range(1, r + 1)}, ">=", 1)

    for i in range(1, r):
        for j in range(1, t + 1):
            s.add_constraint(
                {f"m_{i}_{j}": 1, f"m_{i+1}_{j}": -1, f"x6_{i}_{i+1}_{j}": -1, f"x7_{i}_{i+1}_{j}": k},
                ">=",
                0,
            )
            s.add_constraint(
                {f"m_{i}_{j}": 1, f"m_{i+1}_{j}": -1, f"x6_{i}_{i+1}_{j}": -k}, "<=", 0
            )
            s.add_constraint(
                {f"m_{i+1}_{j}": 1, f"m_{i}_{j}": -1, f"x6_{i+1}_{i}_{j}": -1, f"x7_{i+1}_{i}_{j}": k},
                ">=",
                0,
            )
            s.add_constraint(
                {f"m_{i+1}_{j}": 1, f"m_{i}_{j}": -1, f"x6_{i+1}_{i}_{j}": -k}, "<=", 0
            )
            s.add_constraint({f"x6_{i}_{i+1}_{j}": 1, f"x7_{i}_{i+1}_{j}": 1}, "==", 1)
            s.add_constraint({f"x6_{i+1}_{i}_{j}": 1, f"x7_{i+1}_{i}_{j}": 1}, "==", 1)
            s.add_constraint({f"x8_{i}_{j}": 1, f"x6_{i}_{i+1}_{j}": -1}, "<=", 0)
            s.add_constraint(
                {f"x8_{i}_{j}": t, **{f"x6_{i+1}_{i}_{h}": 1 for h in range(1, j + 1)}},
                "<=",
                t,
            )
            s.add_constraint(
                {
                    f"x8_{i}_{j}": 1,
                    f"x6_{i}_{i+1}_{j}": -1,
                    **{f"x6_{i+1}_{i}_{h}": 1 for h in range(1, j + 1)},
                },
                ">=",
                0,
            )
        s.add_constraint({f"x8_{i}_{j}": 1 for j in range(1, t + 1)}, ">=", 1)
    return s
