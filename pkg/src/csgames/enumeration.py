"""Two independent engines counting and listing complete simple games.

Engine one counts nonempty antichains of the nonzero 0/1 vectors of length
``n`` under the partial-sum order, by depth-first extension over a
comparability graph with bit-packed adjacency rows.  Engine two generates
the class-size / winning-matrix representatives directly for fixed
``(n, t[, r])``, backtracking over rows in lexicographically decreasing
order with incremental incomparability pruning.  Agreement of the two is a
standing cross-check.

Growth is doubly exponential in ``n``, so the antichain engine refuses to
run above a configurable limit (default 9; the default classification limit
is 8 because classifying visits every antichain individually).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .core import Profile, TypedGame
from .errors import ResourceLimitError

DEFAULT_COUNT_LIMIT = 9
DEFAULT_CLASSIFY_LIMIT = 8

__all__ = [
    "ComparabilityGraph",
    "Tabulation",
    "compositions",
    "count_all_games",
    "count_typed",
    "enumerate_typed",
    "tabulate_games",
]


# ---------------------------------------------------------------------------
# Antichain engine
# ---------------------------------------------------------------------------


class ComparabilityGraph:
    """Comparability graph of the nonzero coalition vectors of length n.

    Vertex ids are the integer values of the vectors (voter 1 as most
    significant bit), a fixed numbering so that cached results and parallel
    work splits are reproducible.  Two vertices are adjacent iff they are
    comparable (and distinct) under the partial-sum order.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        self.n = n
        verts = range(1, 1 << n)
        prefixes = {}
        ranks = {}
        for v in verts:
            s = 0
            pref = []
            for k in range(n - 1, -1, -1):
                s += (v >> k) & 1
                pref.append(s)
            prefixes[v] = tuple(pref)
            ranks[v] = sum(pref)
        self.prefixes = prefixes
        self.ranks = ranks
        adjacency = {v: 0 for v in verts}
        for v in verts:
            pv = prefixes[v]
            for u in range(1, v):
                pu = prefixes[u]
                le = ge = True
                for a, b in zip(pu, pv):
                    if a > b:
                        le = False
                        if not ge:
                            break
                    elif a < b:
                        ge = False
                        if not le:
                            break
                if le or ge:
                    adjacency[v] |= 1 << u
                    adjacency[u] |= 1 << v
        self.adjacency = adjacency

    def comparable(self, u: int, v: int) -> bool:
        return bool((self.adjacency[u] >> v) & 1)

    def search_order(self) -> list[int]:
        """Vertices in decreasing rank order (rank = sum of prefix sums)."""
        return sorted(self.adjacency, key=lambda v: (-self.ranks[v], v))


def _extension_masks(graph: ComparabilityGraph) -> list[int]:
    """Per search position: bit-set of later positions incomparable to it."""
    order = graph.search_order()
    pos = {v: i for i, v in enumerate(order)}
    nverts = len(order)
    full = (1 << nverts) - 1
    ext = []
    for i, v in enumerate(order):
        incomp = 0
        adj = graph.adjacency[v]
        for u in order:
            if u != v and not ((adj >> u) & 1):
                incomp |= 1 << pos[u]
        after = full & ~((1 << (i + 1)) - 1)
        ext.append(incomp & after)
    return ext


def _count_antichains(eligible: int, ext: list[int]) -> int:
    total = 0
    e = eligible
    while e:
        low = e & -e
        e ^= low
        i = low.bit_length() - 1
        total += 1 + _count_antichains(eligible & ext[i], ext)
    return total


_WORKER_EXT: dict[int, list[int]] = {}


def _count_task(args: tuple[int, int]) -> int:
    n, first = args
    ext = _WORKER_EXT.get(n)
    if ext is None:
        ext = _WORKER_EXT[n] = _extension_masks(ComparabilityGraph(n))
    return 1 + _count_antichains(ext[first], ext)


def count_all_games(n: int, limit: int = DEFAULT_COUNT_LIMIT, jobs: int = 1) -> int:
    """Number of complete simple games on n voters, via antichain counting."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > limit:
        raise ResourceLimitError(
            f"n={n} exceeds the antichain-counting limit {limit}; "
            f"the count grows doubly exponentially in n"
        )
    ext = _extension_masks(ComparabilityGraph(n))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_count_task, [(n, i) for i in range(len(ext))]))
    return _count_antichains((1 << len(ext)) - 1, ext)


@dataclass
class Tabulation:
    """Game counts on n voters, bucketed by (types, matrix rows)."""

    n: int
    counts: dict[tuple[int, int], int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())

    def by_types(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (t, _), c in self.counts.items():
            out[t] = out.get(t, 0) + c
        return out

    def by_rows(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for (_, r), c in self.counts.items():
            out[r] = out.get(r, 0) + c
        return out

    def sorted_items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.counts.items())


def tabulate_games(n: int, limit: int = DEFAULT_CLASSIFY_LIMIT) -> Tabulation:
    """Count games by (t, r) by visiting every antichain of the graph.

    The class count t of an antichain is one plus the number of voter
    positions where some member vector reads 1 followed by 0 (exactly the
    boundaries recovered by full conversion); r is the antichain size.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > limit:
        raise ResourceLimitError(
            f"n={n} exceeds the classification limit {limit}; "
            f"classifying visits every antichain individually"
        )
    graph = ComparabilityGraph(n)
    order = graph.search_order()
    ext = _extension_masks(graph)
    low_bits = (1 << (n - 1)) - 1
    pat10 = [((v >> 1) & ~v) & low_bits for v in order]
    counts: dict[tuple[int, int], int] = {}

    def rec(eligible: int, boundary_or: int, depth: int) -> None:
        e = eligible
        while e:
            low = e & -e
            e ^= low
            i = low.bit_length() - 1
            bnd = boundary_or | pat10[i]
            key = (bnd.bit_count() + 1, depth + 1)
            counts[key] = counts.get(key, 0) + 1
            rec(eligible & ext[i], bnd, depth + 1)

    rec((1 << len(order)) - 1, 0, 0)
    return Tabulation(n, counts)


# ---------------------------------------------------------------------------
# Typed engine
# ---------------------------------------------------------------------------


def compositions(n: int, t: int) -> Iterator[tuple[int, ...]]:
    """Compositions of n into t positive parts, lexicographically."""
    if t == 1:
        yield (n,)
        return
    for first in range(1, n - t + 2):
        for rest in compositions(n - first, t - 1):
            yield (first, *rest)


def _generate_matrices(
    sizes: tuple[int, ...], r: int | None
) -> Iterator[tuple[Profile, ...]]:
    """All valid winning matrices for fixed class sizes.

    Rows are built in lexicographically decreasing order.  While placing a
    new row coordinate by coordinate, two flags are kept per earlier row:
    whether the new row can still end up below it, and still above it, in
    the partial-sum order; both must be refuted by the last coordinate.
    Interval bounds derived from the refutation requirements keep the scan
    close to the feasible candidates.
    """
    t = len(sizes)
    nprefix = [0] * (t + 1)
    for j in range(t):
        nprefix[j + 1] = nprefix[j] + sizes[j]

    rows: list[Profile] = []
    prefs: list[list[int]] = []  # prefix sums, index 0..t
    gaps: list[list[int]] = []  # gaps[i][j] = max over k>j of nprefix[k]-prefs[i][k]
    totals: list[int] = []
    colmask_stack = [0]
    full_colmask = (1 << (t - 1)) - 1 if t > 1 else 1

    def colmask_of(row: Profile, base: int) -> int:
        if t == 1:
            return base | (1 if row[0] > 0 else 0)
        m = base
        for j in range(t - 1):
            if row[j] > 0 and row[j + 1] < sizes[j + 1]:
                m |= 1 << j
        return m

    def place(j: int, sprev: int, partial: list[int], states: list[int], eq: bool):
        # states[i]: bit 1 = new row can still be <= row i, bit 2 = still >= row i
        last = j == t
        vmin, vmax = 0, sizes[j - 1]
        for i, st in enumerate(states):
            if st & 1:
                if last:
                    bound = totals[i] - sprev + 1
                else:
                    bound = (
                        min(prefs[i][j] - sprev, nprefix[j] - gaps[i][j] - sprev) + 1
                    )
                if bound > vmin:
                    vmin = bound
            if st & 2:
                bound = totals[i] - sprev - 1
                if bound < vmax:
                    vmax = bound
        if eq:
            lastv = rows[-1][j - 1]
            if lastv < vmax:
                vmax = lastv
        for v in range(vmax, vmin - 1, -1):
            s = sprev + v
            nstates = []
            for i, st in enumerate(states):
                p = prefs[i][j]
                ns = st
                if st & 1 and s > p:
                    ns &= ~1
                if st & 2 and s < p:
                    ns &= ~2
                nstates.append(ns)
            partial.append(v)
            if last:
                yield tuple(partial)
            else:
                yield from place(j + 1, s, partial, nstates, eq and v == rows[-1][j - 1])
            partial.pop()

    def extend(depth: int):
        eq0 = bool(rows)
        start_states = [3] * len(rows)
        for row in place(1, 0, [], start_states, eq0):
            cm = colmask_of(row, colmask_stack[-1])
            rows.append(row)
            pref = [0] * (t + 1)
            for j in range(t):
                pref[j + 1] = pref[j] + row[j]
            # gap[j] = max over k > j of (nprefix[k] - pref[k]), a suffix max
            gap = [0] * t
            g = nprefix[t] - pref[t]
            for j in range(t - 1, -1, -1):
                gap[j] = g
                g = max(g, nprefix[j] - pref[j])
            prefs.append(pref)
            gaps.append(gap)
            totals.append(pref[t])
            colmask_stack.append(cm)
            emit_here = cm == full_colmask and (r is None or depth == r)
            if emit_here:
                yield tuple(rows)
            if r is None or depth < r:
                yield from extend(depth + 1)
            colmask_stack.pop()
            totals.pop()
            gaps.pop()
            prefs.pop()
            rows.pop()

    yield from extend(1)


def enumerate_typed(n: int, t: int, r: int | None = None) -> Iterator[TypedGame]:
    """Stream every complete simple game with the given parameters, once each.

    The outer loop runs over compositions of n into t positive class sizes;
    matrices are generated by backtracking.  Emission order is deterministic
    but otherwise unspecified.
    """
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    if r is not None and r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    for sizes in compositions(n, t):
        for matrix in _generate_matrices(sizes, r):
            yield TypedGame(sizes, matrix)


def _count_composition(args: tuple[tuple[int, ...], int | None]) -> int:
    sizes, r = args
    c = 0
    for _ in _generate_matrices(sizes, r):
        c += 1
    return c


def count_typed(n: int, t: int, r: int | None = None, jobs: int = 1) -> int:
    """Number of games with the given parameters, same engine as enumerate_typed."""
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    if r is not None and r < 1:
        raise ValueError(f"need r >= 1, got r={r}")
    tasks = [(sizes, r) for sizes in compositions(n, t)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return sum(pool.map(_count_composition, tasks))
    return sum(_count_composition(task) for task in tasks)
