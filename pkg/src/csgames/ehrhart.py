"""Reconstruct counting quasi-polynomials from exact sample counts.

A counting function that agrees with a degree-d quasi-polynomial of period
q is pinned down by d+1 exact samples per residue class of n mod q.  The
fitter solves one exact rational Vandermonde system per class, reassembles
the per-class polynomials into periodic-number coefficients, and treats
every surplus sample as a held-out check: any mismatch is an error (the
model class was too small), never a silent approximation.

The dilation counter for the bundled demo polytope (x1 + x2 <= 3n,
2*x1 <= 5n, x >= 0) exercises the standard dilation theorem: its counting
function has degree 2 and period dividing 2, the least common multiple of
the vertex denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import FitError, ResourceLimitError
from .formulas import PeriodicNumber, QuasiPolynomial
from .polytope import RationalLinearSystem, count_lattice_points

DEFAULT_SAMPLE_CEILING = 40

__all__ = [
    "Sample",
    "SampleSet",
    "demo_polytope_count",
    "fit_quasi_polynomial",
    "fit_smallest_period",
    "sample_counts",
]


@dataclass(frozen=True)
class Sample:
    n: int
    count: int
    source: str = "unspecified"


@dataclass(frozen=True)
class SampleSet:
    samples: tuple[Sample, ...]

    def __post_init__(self) -> None:
        ns = [s.n for s in self.samples]
        if len(set(ns)) != len(ns):
            raise ValueError("sample n values must be distinct")
        if any(s.count < 0 for s in self.samples):
            raise ValueError("sample counts must be non-negative")
        object.__setattr__(
            self, "samples", tuple(sorted(self.samples, key=lambda s: s.n))
        )

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]], source: str = "unspecified") -> "SampleSet":
        return cls(tuple(Sample(n, c, source) for n, c in pairs))


def _solve_vandermonde(ns: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Coefficients (low degree first) of the interpolating polynomial.

    Exact Gaussian elimination; pivots are chosen among nonzero column
    entries by smallest numerator-plus-denominator bit size, which keeps
    the intermediate fractions short.
    """
    k = len(ns)
    rows = [[Fraction(n) ** j for j in range(k)] + [Fraction(y)] for n, y in zip(ns, ys)]
    for col in range(k):
        pivot = None
        best = None
        for ridx in range(col, k):
            entry = rows[ridx][col]
            if entry == 0:
                continue
            size = entry.numerator.bit_length() + entry.denominator.bit_length()
            if best is None or size < best:
                pivot, best = ridx, size
        if pivot is None:
            raise FitError("singular sample system (repeated n?)")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        pv = rows[col][col]
        rows[col] = [x / pv for x in rows[col]]
        for ridx in range(k):
            if ridx != col and rows[ridx][col] != 0:
                f = rows[ridx][col]
                rows[ridx] = [x - f * y for x, y in zip(rows[ridx], rows[col])]
    return [rows[i][k] for i in range(k)]


def fit_quasi_polynomial(samples: SampleSet, degree: int, period: int) -> QuasiPolynomial:
    """Fit an exact quasi-polynomial of the given degree and period.

    Needs at least degree+1 samples in every residue class mod period;
    surplus samples must be reproduced exactly or the fit is rejected
    with the offending n named.
    """
    if degree < 0 or period < 1:
        raise ValueError("degree must be >= 0 and period >= 1")
    by_class: dict[int, list[Sample]] = {s: [] for s in range(period)}
    for sample in samples.samples:
        by_class[sample.n % period].append(sample)
    class_coeffs: dict[int, list[Fraction]] = {}
    for residue, members in sorted(by_class.items()):
        if len(members) < degree + 1:
            raise FitError(
                f"residue class {residue} (mod {period}) has {len(members)} samples, "
                f"needs {degree + 1}"
            )
        fit_on = members[: degree + 1]
        coeffs = _solve_vandermonde([s.n for s in fit_on], [s.count for s in fit_on])
        for held_out in members[degree + 1 :]:
            value = sum(c * Fraction(held_out.n) ** j for j, c in enumerate(coeffs))
            if value != held_out.count:
                raise FitError(
                    f"model class too small: degree {degree}, period {period} "
                    f"fails at held-out n={held_out.n} ({value} != {held_out.count})"
                )
        class_coeffs[residue] = coeffs
    periodic = []
    for j in range(degree, -1, -1):
        entries = tuple(class_coeffs[s][j] for s in range(period))
        if len(set(entries)) == 1:
            periodic.append(PeriodicNumber((entries[0],)))
        else:
            periodic.append(PeriodicNumber(entries))
    while len(periodic) > 1 and periodic[0].is_zero():
        periodic.pop(0)
    return QuasiPolynomial(tuple(periodic))


def fit_smallest_period(samples: SampleSet, degree: int, max_period: int) -> tuple[int, QuasiPolynomial]:
    """Smallest period q <= max_period consistent with the samples."""
    last: FitError | None = None
    for q in range(1, max_period + 1):
        try:
            return q, fit_quasi_polynomial(samples, degree, q)
        except FitError as err:
            last = err
    raise FitError(f"no period up to {max_period} fits the samples: {last}")


def demo_polytope_count(n: int) -> int:
    """Lattice points of the n-th dilation of the demo polytope."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return 1
    s = RationalLinearSystem()
    s.add_variable("x1", 0, None)
    s.add_variable("x2", 0, None)
    s.add_constraint({"x1": 1, "x2": 1}, "<=", 3 * n)
    s.add_constraint({"x1": 2}, "<=", 5 * n)
    return count_lattice_points(s)


def sample_counts(
    t: int,
    r: int,
    n_values: Iterable[int],
    ceiling: int = DEFAULT_SAMPLE_CEILING,
    use_cache: bool = True,
) -> SampleSet:
    """Exact game counts for fixed (t, r) at each n, from the typed engine.

    Counts are cached on disk (keyed by engine version) because large
    sample windows are the expensive part of a fit.
    """
    from . import cache
    from .enumeration import count_typed

    ns = sorted(set(int(n) for n in n_values))
    if not ns:
        raise ValueError("empty sample range")
    if ns[-1] > ceiling:
        raise ResourceLimitError(
            f"sample n={ns[-1]} above the ceiling {ceiling}; enumeration work "
            f"grows like the count itself, which is already astronomically "
            f"large there"
        )
    out = []
    for n in ns:
        params = {"t": t, "r": r, "n": n}
        value = cache.get("sample-count", params) if use_cache else None
        if value is None:
            value = str(count_typed(n, t, r) if t <= n else 0)
            if use_cache:
                cache.put("sample-count", params, value)
        out.append(Sample(n, int(value), "enumeration"))
    return SampleSet(tuple(out))
