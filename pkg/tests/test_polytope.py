from fractions import Fraction

import pytest

from csgames.enumeration import count_typed
from csgames.errors import UnboundedVariableError
from csgames.formulas import cs_two_types, cs_two_types_one_row
from csgames.polytope import (
    RationalLinearSystem,
    assignment_satisfies,
    build_bigm,
    build_compact_t2,
    count_lattice_points,
    enumerate_lattice_points,
    find_lattice_point,
    is_rationally_feasible,
)


def box(x_hi=5):
    s = RationalLinearSystem()
    s.add_variable("x", 1, x_hi)
    return s


def test_interval_count():
    assert count_lattice_points(box()) == 5


def test_demo_dilation_count():
    s = RationalLinearSystem()
    s.add_variable("x1", 0, None)
    s.add_variable("x2", 0, None)
    s.add_constraint({"x1": 1, "x2": 1}, "<=", 6)
    s.add_constraint({"x1": 2}, "<=", 10)
    assert count_lattice_points(s) == 27


def test_rational_coefficients_handled_exactly():
    s = RationalLinearSystem()
    s.add_variable("x", 0, None)
    s.add_constraint({"x": Fraction(2, 3)}, "<=", Fraction(7, 2))  # x <= 21/4
    assert count_lattice_points(s) == 6


def test_unbounded_rejected_with_name():
    s = RationalLinearSystem()
    s.add_variable("free_one", 0, None)
    s.add_variable("bounded", 0, 3)
    with pytest.raises(UnboundedVariableError) as err:
        count_lattice_points(s)
    assert "free_one" in str(err.value)


def test_inconsistent_system_counts_zero():
    s = box()
    s.add_constraint({"x": 1}, ">=", 9)
    assert count_lattice_points(s) == 0
    assert find_lattice_point(s) is None


def test_enumerate_and_satisfaction():
    s = RationalLinearSystem()
    s.add_variable("a", 0, 2)
    s.add_variable("b", 0, 2)
    s.add_constraint({"a": 1, "b": 1}, "==", 2)
    points = list(enumerate_lattice_points(s))
    assert sorted((p["a"], p["b"]) for p in points) == [(0, 2), (1, 1), (2, 0)]
    for p in points:
        assert assignment_satisfies(s, p)
    assert not assignment_satisfies(s, {"a": 2, "b": 2})


def test_propagation_agrees_with_leaf_checking():
    systems = [build_compact_t2(5, 2), build_compact_t2(6, 1), build_bigm(4, 2, 1)]
    for s in systems[:2]:
        with_prop = count_lattice_points(s, propagate=True)
        without = count_lattice_points(s, propagate=False)
        assert with_prop == without


def test_compact_counts():
    assert count_lattice_points(build_compact_t2(4, 1)) == 10
    assert count_lattice_points(build_compact_t2(6, 2)) == 40
    assert count_lattice_points(build_compact_t2(3, 2)) == 1


def test_compact_matches_formula_range():
    for n in range(2, 10):
        for r in range(1, 4):
            expected = cs_two_types_one_row(n) if r == 1 else cs_two_types(n, r)
            assert count_lattice_points(build_compact_t2(n, r)) == expected


def test_bigm_examples():
    assert count_lattice_points(build_bigm(4, 2, 1)) == 10
    assert count_lattice_points(build_bigm(4, 3, 2)) == 5
    with pytest.raises(ValueError):
        build_bigm(5, 1, 1)


def test_bigm_matches_enumeration_small():
    for n in range(2, 5):
        for t in range(1, n + 1):
            for r in range(1, 3):
                if t + r <= 2:
                    continue
                assert count_lattice_points(build_bigm(n, t, r)) == count_typed(n, t, r)


def test_bigm_auxiliaries_unique_per_game():
    for n, t, r in ((4, 2, 2), (5, 3, 2), (4, 3, 1)):
        seen = set()
        game_vars = [f"n_{j}" for j in range(1, t + 1)] + [
            f"m_{i}_{j}" for i in range(1, r + 1) for j in range(1, t + 1)
        ]
        for point in enumerate_lattice_points(build_bigm(n, t, r)):
            key = tuple(point[v] for v in game_vars)
            assert key not in seen  # one auxiliary completion per game
            seen.add(key)
        assert len(seen) == count_typed(n, t, r)


def test_fm_trivial():
    s = RationalLinearSystem()
    s.add_variable("x")
    s.add_constraint({"x": 1}, ">=", 1)
    s.add_constraint({"x": 1}, "<=", 0)
    assert not is_rationally_feasible(s)


def test_fm_compact_examples():
    assert not is_rationally_feasible(build_compact_t2(2, 2))
    assert is_rationally_feasible(build_compact_t2(6, 2))


def test_fm_soundness_vs_counting():
    for n in range(2, 8):
        for r in range(1, 4):
            s = build_compact_t2(n, r)
            if count_lattice_points(s) > 0:
                assert is_rationally_feasible(s)


def test_fm_feasible_without_integer_point():
    # 4 <= 3x <= 5 has rational but no integer solutions
    s = RationalLinearSystem()
    s.add_variable("x", None, None)
    s.add_constraint({"x": 3}, ">=", 4)
    s.add_constraint({"x": 3}, "<=", 5)
    assert is_rationally_feasible(s)
    s2 = RationalLinearSystem()
    s2.add_variable("x", 0, 5)
    s2.add_constraint({"x": 3}, ">=", 4)
    s2.add_constraint({"x": 3}, "<=", 5)
    assert count_lattice_points(s2) == 0


def test_fm_ceiling_is_a_distinct_outcome():
    from csgames.errors import ResourceLimitError

    s = build_bigm(5, 3, 2)
    with pytest.raises(ResourceLimitError):
        is_rationally_feasible(s, max_constraints=3)


def test_serialization_round_trip():
    s = build_compact_t2(5, 2)
    restored = RationalLinearSystem.from_json_dict(s.to_json_dict())
    assert restored.to_json() == s.to_json()
    assert count_lattice_points(restored) == count_lattice_points(s)
    text = s.to_lp_text()
    assert "subject to" in text and "n1" in text


def test_deterministic_output():
    s = build_compact_t2(5, 2)
    assert s.to_json() == build_compact_t2(5, 2).to_json()
    pts1 = list(enumerate_lattice_points(s))
    pts2 = list(enumerate_lattice_points(build_compact_t2(5, 2)))
    assert pts1 == pts2
