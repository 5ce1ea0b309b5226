"""Exact enumeration and verification workbench for complete simple games.

Every number produced here is exact (arbitrary-precision integers and
rationals), and every headline quantity can be computed by at least two
independent routes: direct isomorph-free enumeration, antichain counting,
closed-form and quasi-polynomial formulas, and lattice-point counts of
integer-programming models.  The :mod:`csgames.acceptance` module wires the
cross-checks together; ``csgames verify --suite all`` runs them all.
"""

__version__ = "0.1.0"

from .core import (  # noqa: F401
    Comparison,
    TypedGame,
    TwoTypeDecomposition,
    Violation,
    binary_to_typed,
    compare_lex,
    compare_partial_sum,
    format_game,
    is_winning_profile,
    max_shift_minimal,
    parse_game,
    shift_maximal_losing,
    t2_compose,
    t2_decompose,
    typed_to_binary,
    validate_typed_game,
)
