import pytest

from csgames.core import format_game, max_shift_minimal, validate_typed_game
from csgames.enumeration import (
    ComparabilityGraph,
    compositions,
    count_all_games,
    count_typed,
    enumerate_typed,
    tabulate_games,
)
from csgames.errors import ResourceLimitError

KNOWN_TOTALS = {1: 1, 2: 3, 3: 8, 4: 25, 5: 117, 6: 1171, 7: 44313}


def test_known_totals():
    for n, expected in KNOWN_TOTALS.items():
        assert count_all_games(n) == expected


def test_count_limit_enforced():
    with pytest.raises(ResourceLimitError):
        count_all_games(10)
    with pytest.raises(ResourceLimitError):
        tabulate_games(9)


def test_limit_is_configuration():
    assert count_all_games(3, limit=3) == 8
    with pytest.raises(ResourceLimitError):
        count_all_games(4, limit=3)


def test_graph_structure():
    g = ComparabilityGraph(3)
    assert len(g.adjacency) == 7
    # 011 < 101 < 110 pairwise comparable; 110 and 101 dominate 011
    assert g.comparable(0b011, 0b101)
    assert g.comparable(0b101, 0b110)
    # equal-weight vectors are incomparable
    assert not g.comparable(0b100, 0b011)


def test_graph_vertex_count_gives_one_row_total():
    for n in range(1, 7):
        assert len(ComparabilityGraph(n).adjacency) == 2**n - 1


def test_tabulate_small():
    tab = tabulate_games(2)
    assert tab.sorted_items() == [((1, 1), 2), ((2, 1), 1)]
    tab4 = tabulate_games(4)
    assert tab4.total() == 25
    assert tab4.by_types() == {1: 4, 2: 15, 3: 6}
    assert all(t <= 4 for (t, _) in tab4.counts)


def test_tabulate_matches_full_conversion():
    from csgames.core import binary_to_typed
    from tests.test_core import all_antichains

    for n in range(1, 6):
        buckets = {}
        for chain in all_antichains(n):
            game = binary_to_typed(chain, n)
            key = (game.t, game.r)
            buckets[key] = buckets.get(key, 0) + 1
        assert tabulate_games(n).counts == buckets


def test_tabulate_invariants():
    for n in (4, 5, 6):
        tab = tabulate_games(n)
        assert tab.total() == count_all_games(n)
        maxr = max_shift_minimal(n)
        assert all(r <= maxr for (_, r) in tab.counts)
        from csgames.formulas import cs_one_row

        for t in range(2, n + 1):
            assert tab.counts.get((t, 1), 0) == cs_one_row(n, t)


def test_compositions():
    assert list(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert sum(1 for _ in compositions(8, 3)) == 21


def test_enumerate_examples():
    assert count_typed(4, 3, 1) == 1
    assert count_typed(4, 2, 2) == 5
    assert count_typed(2, 2, 1) == 1


def test_enumerate_rejects_bad_parameters():
    with pytest.raises(ValueError):
        count_typed(3, 4)
    with pytest.raises(ValueError):
        count_typed(3, 0)
    with pytest.raises(ValueError):
        count_typed(3, 2, 0)


def test_engine_equivalence_small():
    for n in range(1, 7):
        typed_total = sum(count_typed(n, t) for t in range(1, n + 1))
        assert typed_total == count_all_games(n)


def test_every_streamed_game_validates_no_duplicates():
    for n in range(1, 7):
        seen = set()
        for t in range(1, n + 1):
            for game in enumerate_typed(n, t):
                assert game.n == n and game.t == t
                assert validate_typed_game(game) == []
                line = format_game(game)
                assert line not in seen
                seen.add(line)
        assert len(seen) == count_all_games(n)


def test_fixed_r_agrees_with_filtering():
    for n in range(2, 7):
        for t in range(1, n + 1):
            by_r = {}
            for game in enumerate_typed(n, t):
                by_r[game.r] = by_r.get(game.r, 0) + 1
            for r in range(1, max_shift_minimal(n) + 1):
                assert count_typed(n, t, r) == by_r.get(r, 0)


def test_one_row_totals():
    for n in range(1, 13):
        assert sum(count_typed(n, t, 1) for t in range(1, n + 1)) == 2**n - 1


def test_determinism_and_jobs_merge():
    base = count_typed(6, 3)
    assert count_typed(6, 3) == base
    assert count_typed(6, 3, jobs=2) == base
    assert count_all_games(6, jobs=2) == count_all_games(6)


def test_stream_is_deterministic():
    first = [format_game(g) for g in enumerate_typed(5, 2)]
    second = [format_game(g) for g in enumerate_typed(5, 2)]
    assert first == second


@pytest.mark.slow
def test_engine_equivalence_n8():
    assert sum(count_typed(8, t) for t in range(1, 9)) == 16175188
