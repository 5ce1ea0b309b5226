"""Domain model for complete simple games.

A complete simple game on ``n`` voters, with voters sorted by weakly
decreasing desirability, is determined up to isomorphism by the vector
``nvec = (n_1 .. n_t)`` of sizes of the equivalence classes of equally
desirable voters together with the matrix ``M`` whose ``r`` rows are the
shift-minimal winning profiles.  A profile ``(m_1 .. m_t)`` stands for any
coalition containing exactly ``m_j`` voters of class ``j``.

Two orders drive everything here:

* the partial-sum order: ``a`` is at most ``b`` when every prefix sum of
  ``a`` is at most the corresponding prefix sum of ``b`` (trading a member
  for a more desirable one can only help a coalition);
* the lexicographic order on profiles, used to fix a canonical row order.

A pair ``(nvec, M)`` describes a complete simple game exactly when

1. every entry satisfies ``0 <= m_ij <= n_j``,
2. the rows are pairwise incomparable under the partial-sum order,
3. every column ``j < t`` has a witness row with ``m_ij > 0`` and
   ``m_i(j+1) < n_(j+1)`` (``m_11 > 0`` when ``t == 1``), and
4. the rows are strictly decreasing lexicographically.

Games can equivalently be given as antichains of nonzero 0/1 vectors of
length ``n`` under the partial-sum order; :func:`typed_to_binary` and
:func:`binary_to_typed` convert between the two forms.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable, Iterator, Sequence

Profile = tuple[int, ...]

__all__ = [
    "Comparison",
    "Profile",
    "TypedGame",
    "TwoTypeDecomposition",
    "Violation",
    "binary_to_typed",
    "bits_to_mask",
    "compare_lex",
    "compare_partial_sum",
    "format_game",
    "game_from_json",
    "game_to_json",
    "is_winning_profile",
    "iter_profiles",
    "mask_to_bits",
    "max_shift_minimal",
    "parse_game",
    "shift_maximal_losing",
    "t2_compose",
    "t2_decompose",
    "typed_to_binary",
    "validate_typed_game",
]


class Comparison(Enum):
    """Outcome of comparing two profiles under the partial-sum order."""

    EQUAL = "equal"
    LESS_EQ = "less-eq"
    GREATER_EQ = "greater-eq"
    INCOMPARABLE = "incomparable"


def compare_partial_sum(a: Sequence[int], b: Sequence[int]) -> Comparison:
    """Compare profiles ``a`` and ``b`` by prefix sums.

    Returns ``LESS_EQ`` iff every prefix sum of ``a`` is <= the matching
    prefix sum of ``b``; ``INCOMPARABLE`` iff neither direction holds.
    """
    if len(a) != len(b):
        raise ValueError(f"profiles have different lengths: {len(a)} vs {len(b)}")
    le = ge = True
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa > sb:
            le = False
        if sa < sb:
            ge = False
    if le and ge:
        return Comparison.EQUAL
    if le:
        return Comparison.LESS_EQ
    if ge:
        return Comparison.GREATER_EQ
    return Comparison.INCOMPARABLE


def compare_lex(a: Sequence[int], b: Sequence[int]) -> int:
    """Lexicographic comparison; 1 if ``a`` is greater, -1 if smaller, 0 if equal."""
    if len(a) != len(b):
        raise ValueError(f"profiles have different lengths: {len(a)} vs {len(b)}")
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0


@dataclass(frozen=True)
class TypedGame:
    """A complete simple game in class-size / winning-matrix form.

    Rows are stored in canonical (lexicographically decreasing) order; the
    constructor sorts whatever order it is given.  Construction only checks
    shape; the four validity properties are the business of
    :func:`validate_typed_game` so that invalid candidates can be inspected.
    """

    class_sizes: Profile
    matrix: tuple[Profile, ...]

    def __post_init__(self) -> None:
        sizes = tuple(int(v) for v in self.class_sizes)
        if not sizes:
            raise ValueError("class_sizes must be nonempty")
        if any(v < 1 for v in sizes):
            raise ValueError(f"class sizes must be positive: {sizes}")
        rows = tuple(tuple(int(v) for v in row) for row in self.matrix)
        if not rows:
            raise ValueError("matrix must have at least one row")
        for row in rows:
            if len(row) != len(sizes):
                raise ValueError(f"row {row} does not have {len(sizes)} entries")
        rows = tuple(sorted(rows, reverse=True))
        object.__setattr__(self, "class_sizes", sizes)
        object.__setattr__(self, "matrix", rows)

    @property
    def n(self) -> int:
        return sum(self.class_sizes)

    @property
    def t(self) -> int:
        return len(self.class_sizes)

    @property
    def r(self) -> int:
        return len(self.matrix)


@dataclass(frozen=True)
class Violation:
    """One failed validity property, with 1-based offending indices."""

    rule: str  # "bounds" | "comparable-rows" | "column-condition" | "row-order"
    where: tuple[int, ...]


def validate_typed_game(game: TypedGame) -> list[Violation]:
    """Check the four validity properties; an empty list means the game is valid."""
    violations: list[Violation] = []
    sizes, rows = game.class_sizes, game.matrix
    t, r = game.t, game.r
    for i, row in enumerate(rows, start=1):
        for j, (m, nj) in enumerate(zip(row, sizes), start=1):
            if not 0 <= m <= nj:
                violations.append(Violation("bounds", (i, j)))
    for i in range(r):
        for j in range(i + 1, r):
            if compare_partial_sum(rows[i], rows[j]) is not Comparison.INCOMPARABLE:
                violations.append(Violation("comparable-rows", (i + 1, j + 1)))
    if t == 1:
        if rows[0][0] <= 0:
            violations.append(Violation("column-condition", (1,)))
    else:
        for j in range(t - 1):
            if not any(row[j] > 0 and row[j + 1] < sizes[j + 1] for row in rows):
                violations.append(Violation("column-condition", (j + 1,)))
    for i in range(r - 1):
        if compare_lex(rows[i], rows[i + 1]) != 1:
            violations.append(Violation("row-order", (i + 1, i + 2)))
    return violations


def iter_profiles(class_sizes: Sequence[int]) -> Iterator[Profile]:
    """All profiles of the box ``0..n_1 x ... x 0..n_t``."""
    return product(*(range(nj + 1) for nj in class_sizes))


def _check_profile(game: TypedGame, profile: Sequence[int]) -> Profile:
    p = tuple(profile)
    if len(p) != game.t:
        raise ValueError(f"profile {p} does not have {game.t} entries")
    for j, (v, nj) in enumerate(zip(p, game.class_sizes), start=1):
        if not 0 <= v <= nj:
            raise ValueError(f"profile entry {v} out of range 0..{nj} in position {j}")
    return p


def is_winning_profile(game: TypedGame, profile: Sequence[int]) -> bool:
    """A profile wins iff it dominates some matrix row in the partial-sum order."""
    p = _check_profile(game, profile)
    for row in game.matrix:
        if compare_partial_sum(row, p) in (Comparison.LESS_EQ, Comparison.EQUAL):
            return True
    return False


def shift_maximal_losing(game: TypedGame) -> list[Profile]:
    """All losing profiles whose every strictly greater profile wins.

    Returned in lexicographically decreasing order.  These determine the
    game just as well as the winning matrix does.
    """
    box = list(iter_profiles(game.class_sizes))
    winning = {p: is_winning_profile(game, p) for p in box}
    out = []
    for p in box:
        if winning[p]:
            continue
        maximal = True
        for q in box:
            if q == p or winning[q]:
                continue
            if compare_partial_sum(p, q) is Comparison.LESS_EQ:
                maximal = False  # a losing profile strictly above p
                break
        if maximal:
            out.append(p)
    return sorted(out, reverse=True)


# ---------------------------------------------------------------------------
# Binary (antichain) form
# ---------------------------------------------------------------------------
#
# A coalition is a 0/1 vector of length n, voter 1 in the most significant
# bit.  Within each class block the canonical representative of a profile
# puts its ones in the LAST positions of the block, which is the smallest
# representative under the partial-sum order.


def bits_to_mask(bits: Sequence[int]) -> int:
    """Pack a 0/1 vector (voter 1 first) into an int, voter 1 as MSB."""
    mask = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"not a 0/1 vector: {tuple(bits)}")
        mask = (mask << 1) | b
    return mask


def mask_to_bits(mask: int, n: int) -> tuple[int, ...]:
    """Unpack an n-voter coalition mask into its 0/1 vector."""
    if not 0 <= mask < (1 << n):
        raise ValueError(f"mask {mask} out of range for n={n}")
    return tuple((mask >> (n - 1 - i)) & 1 for i in range(n))


def typed_to_binary(game: TypedGame) -> frozenset[int]:
    """Canonical 0/1 coalition vectors of the matrix rows, as bit masks."""
    masks = set()
    for row in game.matrix:
        mask = 0
        for nj, mj in zip(game.class_sizes, row):
            mask = (mask << nj) | ((1 << mj) - 1)
        masks.add(mask)
    return frozenset(masks)


def binary_to_typed(masks: Iterable[int], n: int) -> TypedGame:
    """Reconstruct the class-size / matrix form from an antichain of coalitions.

    A class boundary sits between voters ``p`` and ``p+1`` exactly when some
    input vector has a 1 at ``p`` and a 0 at ``p+1``; the class sizes are the
    run lengths and each row collects per-class popcounts.  Rejects inputs
    that are empty, contain the zero vector, or are not pairwise
    incomparable.
    """
    vs = sorted(set(int(m) for m in masks))
    if not vs:
        raise ValueError("empty coalition set")
    for v in vs:
        if not 1 <= v < (1 << n):
            raise ValueError(f"coalition mask {v} out of range for n={n}")
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            cmp = compare_partial_sum(mask_to_bits(vs[i], n), mask_to_bits(vs[j], n))
            if cmp is not Comparison.INCOMPARABLE:
                raise ValueError(
                    f"coalitions {vs[i]:0{n}b} and {vs[j]:0{n}b} are comparable"
                )
    # OR of the "1 followed by 0" patterns over all vectors; bit k set means a
    # boundary after voter n-1-k.
    pat = 0
    for v in vs:
        pat |= (v >> 1) & ~v
    pat &= (1 << (n - 1)) - 1
    boundaries = sorted(n - 1 - k for k in range(n - 1) if (pat >> k) & 1)
    edges = [0, *boundaries, n]
    sizes = tuple(edges[i + 1] - edges[i] for i in range(len(edges) - 1))
    rows = []
    for v in vs:
        row = []
        for lo, hi in zip(edges, edges[1:]):
            block = (v >> (n - hi)) & ((1 << (hi - lo)) - 1)
            row.append(block.bit_count())
        rows.append(tuple(row))
    return TypedGame(sizes, tuple(rows))


# ---------------------------------------------------------------------------
# Largest possible number of matrix rows
# ---------------------------------------------------------------------------


def max_shift_minimal(n: int) -> int:
    """Largest possible number of shift-minimal winning profiles on n voters.

    Coalitions of equal desirability weight (sum of the distinct values
    n, n-1, .., 1 of their members) are pairwise incomparable, and no larger
    antichain is realizable, so the answer is the largest number of subsets
    of {1..n} sharing a sum: the maximal coefficient of the product of
    (1 + x^i) for i = 1..n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    counts = [0] * (n * (n + 1) // 2 + 1)
    counts[0] = 1
    for i in range(1, n + 1):
        for s in range(len(counts) - 1, i - 1, -1):
            counts[s] += counts[s - i]
    return max(counts)


# ---------------------------------------------------------------------------
# The two-class normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TwoTypeDecomposition:
    """Slack variables parameterizing two-class games with >= 2 matrix rows.

    With ``R`` rows, ``x`` has ``R-1`` entries, ``y`` has ``R+1`` entries and
    ``2*sum(x) + sum(y) + z1 + z2 + 3*(R-1)`` equals the number of voters.
    """

    x: tuple[int, ...]
    y: tuple[int, ...]
    z1: int
    z2: int

    def __post_init__(self) -> None:
        x = tuple(int(v) for v in self.x)
        y = tuple(int(v) for v in self.y)
        if len(x) < 1:
            raise ValueError("x must have at least one entry (two matrix rows)")
        if len(y) != len(x) + 2:
            raise ValueError(f"y must have {len(x) + 2} entries, got {len(y)}")
        if any(v < 0 for v in x + y) or self.z1 < 0 or self.z2 < 0:
            raise ValueError("all components must be non-negative")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @property
    def rows(self) -> int:
        return len(self.x) + 1

    @property
    def n(self) -> int:
        return 2 * sum(self.x) + sum(self.y) + self.z1 + self.z2 + 3 * (self.rows - 1)


def t2_compose(dec: TwoTypeDecomposition) -> TypedGame:
    """Build the two-class game encoded by a decomposition."""
    r = dec.rows - 1  # number of consecutive-row gaps
    x, y = dec.x, dec.y
    n1 = r + sum(x) + y[r + 1] + dec.z1
    n2 = 2 * r + sum(x) + sum(y[: r + 1]) + dec.z2
    rows = []
    for i in range(r + 1):
        m1 = (r - i) + sum(x[i:]) + y[r + 1]
        m2 = 2 * i + sum(x[:i]) + sum(y[: i + 1])
        rows.append((m1, m2))
    return TypedGame((n1, n2), tuple(rows))


def t2_decompose(game: TypedGame) -> TwoTypeDecomposition:
    """Invert :func:`t2_compose` for a valid two-class game with >= 2 rows."""
    if game.t != 2:
        raise ValueError(f"decomposition needs t=2, got t={game.t}")
    if game.r < 2:
        raise ValueError(f"decomposition needs r>=2, got r={game.r}")
    rows = game.matrix
    r = game.r - 1
    x = [rows[i][0] - rows[i + 1][0] - 1 for i in range(r)]
    y = [0] * (r + 2)
    y[0] = rows[0][1]
    y[r + 1] = rows[r][0]
    for i in range(1, r + 1):
        y[i] = rows[i][1] - rows[i - 1][1] - 2 - x[i - 1]
    z1 = game.class_sizes[0] - r - sum(x) - y[r + 1]
    z2 = game.class_sizes[1] - 2 * r - sum(x) - sum(y[: r + 1])
    if any(v < 0 for v in x + y) or z1 < 0 or z2 < 0:
        raise ValueError(f"game is not a valid two-class game: {format_game(game)}")
    return TwoTypeDecomposition(tuple(x), tuple(y), z1, z2)


# ---------------------------------------------------------------------------
# Canonical text and JSON forms
# ---------------------------------------------------------------------------

_GAME_RE = re.compile(
    r"^csg n=(\d+) t=(\d+) r=(\d+); nvec=\[([0-9,]*)\]; M=\[(.*)\]$"
)


def format_game(game: TypedGame) -> str:
    """Canonical one-line text form, e.g. ``csg n=4 t=2 r=1; nvec=[2,2]; M=[[1,1]]``."""
    nvec = ",".join(str(v) for v in game.class_sizes)
    rows = ",".join("[" + ",".join(str(v) for v in row) + "]" for row in game.matrix)
    return f"csg n={game.n} t={game.t} r={game.r}; nvec=[{nvec}]; M=[{rows}]"


def parse_game(text: str) -> TypedGame:
    """Parse the canonical text form; inverse of :func:`format_game`."""
    m = _GAME_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a canonical game line: {text!r}")
    n, t, r = int(m.group(1)), int(m.group(2)), int(m.group(3))
    sizes = tuple(int(v) for v in m.group(4).split(",") if v != "")
    body = m.group(5)
    rows = []
    for part in re.findall(r"\[([0-9,]*)\]", body):
        rows.append(tuple(int(v) for v in part.split(",") if v != ""))
    game = TypedGame(sizes, tuple(rows))
    if game.n != n or game.t != t or game.r != r:
        raise ValueError(f"inconsistent header in game line: {text!r}")
    return game


def game_to_json(game: TypedGame) -> str:
    """Canonical JSON object form."""
    return json.dumps(
        {"n": game.n, "nvec": list(game.class_sizes), "M": [list(r) for r in game.matrix]},
        sort_keys=True,
        separators=(",", ":"),
    )


def game_from_json(text: str) -> TypedGame:
    data = json.loads(text)
    game = TypedGame(tuple(data["nvec"]), tuple(tuple(row) for row in data["M"]))
    if "n" in data and game.n != int(data["n"]):
        raise ValueError(f"inconsistent n in game JSON: {text!r}")
    return game
