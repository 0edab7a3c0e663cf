"""Counting, enumeration, and sampling against an independent oracle."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import count_tilings_oracle, fib, region_cells
from ribbonry import (
    Cell,
    NotTileableError,
    Occupancy,
    Region,
    build_aztec,
    build_rectangle,
    build_stair,
    count_minimal,
    count_tilings,
    count_variable,
    entropy,
    enumerate_tilings,
    is_tileable,
    log2_big,
    min_uncovered_cell,
    parse_region,
    placements_at,
    sample_tiling,
    tiling_probability,
)

ORACLE_BATTERY = [
    (build_rectangle(1, 4), 2),
    (build_rectangle(2, 3), 2),
    (build_rectangle(2, 4), 2),
    (build_rectangle(3, 4), 2),
    (build_rectangle(2, 6), 3),
    (build_rectangle(3, 3), 3),
    (build_rectangle(3, 6), 3),
    (build_rectangle(4, 4), 4),
    (build_rectangle(2, 5), 5),
    (build_aztec(1, 2, 0), 2),
    (build_aztec(1, 3, 0), 3),
    (build_aztec(1, 3, 1), 3),
    (build_aztec(2, 2, 0), 2),
    (build_aztec(2, 3, 1), 3),
    (build_stair(3, 3), 3),
    (build_stair(4, 3), 3),
    (build_stair(3, 4), 4),
    (build_stair(4, 2), 2),
    (parse_region(".##.\n####\n####\n.##."), 2),
    (parse_region(".####\n#####"), 3),
    (parse_region("##../.##./..##".replace("/", "\n")), 2),
    (parse_region("#.\n.#"), 2),
    (parse_region("###\n#.#\n###"), 2),
]

FROZEN_COUNTS = [
    (build_rectangle(3, 6), 3, 61),
    (build_rectangle(3, 9), 3, 669),
    (build_rectangle(3, 12), 3, 7426),
    (build_rectangle(4, 8), 4, 1379),
    (build_rectangle(4, 4), 4, 24),
    (build_rectangle(5, 5), 5, 120),
    (build_aztec(2, 3, 1), 3, 8),
    (build_aztec(3, 2, 0), 2, 64),
    (build_stair(6, 3), 3, 32),
    (build_stair(5, 5), 5, 54),
    (build_stair(4, 7), 7, 24),
]


def test_count_matches_oracle_battery():
    for region, n in ORACLE_BATTERY:
        want = count_tilings_oracle(region_cells(region), (n,))
        assert count_tilings(region, n) == want, region.to_text()


def test_frozen_counts():
    for region, n, want in FROZEN_COUNTS:
        assert count_tilings(region, n) == want


def test_count_invariant_under_options():
    cases = [
        (build_rectangle(3, 9), 3),
        (build_rectangle(4, 6), 4),
        (parse_region(".##.\n####\n####\n.##."), 2),
    ]
    for region, n in cases:
        base = count_tilings(region, n)
        assert count_tilings(region, n, memo=False) == base
        assert count_tilings(region, n, prune=True) == base
        assert count_tilings(region, n, threads=4) == base
        assert count_tilings(region, n, memo_limit=0) == base
        assert count_tilings(region, n, memo_limit=10 * 160) == base


def test_memo_limit_env_override(monkeypatch):
    region = build_rectangle(3, 6)
    monkeypatch.setenv("RIBBONRY_MEMO_LIMIT", "480")
    assert count_tilings(region, 3) == 61
    monkeypatch.setenv("RIBBONRY_MEMO_LIMIT", "not-a-number")
    with pytest.raises(ValueError, match="RIBBONRY_MEMO_LIMIT"):
        count_tilings(region, 3)


def test_count_zero_cases():
    assert count_tilings(build_rectangle(2, 3), 4) == 0
    assert count_tilings(build_rectangle(2, 6), 4) == 0
    assert count_tilings(parse_region("#.\n.#"), 2) == 0
    with pytest.raises(ValueError):
        count_tilings(build_rectangle(2, 2), 0)


def test_enumerate_agrees_with_count():
    for region, n in ORACLE_BATTERY:
        tilings = list(enumerate_tilings(region, n))
        assert len(tilings) == count_tilings(region, n)
        assert len(set(tilings)) == len(tilings)
        for tiling in tilings:
            tiling.validate()


def test_enumerate_golden_order():
    tilings = [t.to_json() for t in enumerate_tilings(build_rectangle(2, 3), 2)]
    assert tilings == [
        '{"tiles":[{"root":[0,0],"moves":"E"},{"root":[0,1],"moves":"E"},'
        '{"root":[2,0],"moves":"N"}]}',
        '{"tiles":[{"root":[0,0],"moves":"N"},{"root":[1,0],"moves":"E"},'
        '{"root":[1,1],"moves":"E"}]}',
        '{"tiles":[{"root":[0,0],"moves":"N"},{"root":[1,0],"moves":"N"},'
        '{"root":[2,0],"moves":"N"}]}',
    ]


def test_enumerated_roots_follow_minimal_cell_rule():
    for region, n in [(build_rectangle(3, 6), 3), (build_stair(4, 3), 3)]:
        for tiling in enumerate_tilings(region, n):
            covered: set[Cell] = set()
            for tile in tiling.tiles:
                occ = Occupancy(region, frozenset(covered))
                assert tile.root == min_uncovered_cell(occ)
                covered.update(tile.cells())


def test_placements_at_canonical_order():
    region = build_rectangle(3, 3)
    occ = Occupancy(region, frozenset())
    tiles = placements_at(occ, Cell(0, 0), [3])
    words = ["".join(t.shape.moves) for t in tiles]
    assert words == ["EE", "EN", "NE", "NN"]
    mixed = placements_at(occ, Cell(0, 0), [1, 2])
    assert [t.shape.moves for t in mixed] == ["", "E", "N"]


def test_placements_respect_coverage():
    region = build_rectangle(2, 2)
    occ = Occupancy(region, frozenset([Cell(1, 0)]))
    tiles = placements_at(occ, Cell(0, 0), [2])
    assert [t.shape.moves for t in tiles] == ["N"]
    with pytest.raises(ValueError, match="not free"):
        placements_at(occ, Cell(1, 0), [2])


def test_occupancy_rejects_stray_cells():
    with pytest.raises(ValueError, match="outside"):
        Occupancy(build_rectangle(2, 2), frozenset([Cell(5, 5)]))


def test_is_tileable_matches_count():
    for region, n in ORACLE_BATTERY:
        assert is_tileable(region, n) == (count_tilings(region, n) > 0)
    assert is_tileable(build_rectangle(6, 10), 4) is False
    assert is_tileable(build_rectangle(4, 10), 4) is True


def test_fibonacci_strip_counts():
    for cols in range(1, 31):
        assert count_tilings(build_rectangle(2, cols), 2) == fib(cols + 1)


def test_strip_counts_super_additive():
    for a, b in [(3, 3), (4, 6), (6, 6), (5, 9)]:
        joined = count_tilings(build_rectangle(3, a + b), 3)
        left = count_tilings(build_rectangle(3, a), 3)
        right = count_tilings(build_rectangle(3, b), 3)
        assert joined >= left * right


def test_count_bounded_by_free_squares():
    for region, n in ORACLE_BATTERY:
        count = count_tilings(region, n)
        if count and region.area % n == 0:
            tiles = region.area // n
            assert count <= 2 ** ((n - 1) * tiles)


def test_variable_and_minimal_counts():
    region = build_rectangle(2, 3)
    assert count_variable(region) == count_tilings_oracle(
        region_cells(region), tuple(range(1, 7))
    )
    assert count_minimal(region) == (2, 4)
    assert count_minimal(build_rectangle(1, 5)) == (1, 1)
    hist = build_rectangle(3, 3).level_histogram
    assert count_minimal(build_rectangle(3, 3))[0] >= max(hist.values())


def test_entropy_values():
    assert entropy(build_rectangle(2, 2), 2) == 0.5
    assert entropy(build_rectangle(3, 6), 3) == pytest.approx(log2_big(61) / 6)
    with pytest.raises(NotTileableError):
        entropy(build_rectangle(2, 3), 4)


def test_log2_big():
    assert log2_big(1) == 0.0
    assert log2_big(1 << 200) == 200.0
    assert log2_big(3) == pytest.approx(1.5849625007211562)
    with pytest.raises(ValueError):
        log2_big(0)


def test_sampler_is_deterministic_and_valid():
    region = build_stair(7, 3)
    first = sample_tiling(region, 3, seed=1)
    second = sample_tiling(region, 3, seed=1)
    assert first == second
    first.validate()
    assert sample_tiling(region, 3, seed=2) != first or count_tilings(region, 3) == 1


def test_sampler_reaches_every_tiling():
    region = build_rectangle(2, 4)
    expected = set(enumerate_tilings(region, 2))
    seen = {sample_tiling(region, 2, seed) for seed in range(120)}
    assert seen == expected


def test_sampler_errors():
    with pytest.raises(NotTileableError):
        sample_tiling(build_rectangle(2, 3), 4, seed=0)
    with pytest.raises(NotTileableError):
        sample_tiling(parse_region("#.\n.#"), 2, seed=0)


def test_tiling_probability_exactly_uniform():
    for region, n in [(build_rectangle(3, 3), 3), (build_rectangle(2, 4), 2)]:
        total = count_tilings(region, n)
        probs = [tiling_probability(region, n, t) for t in enumerate_tilings(region, n)]
        assert all(p == Fraction(1, total) for p in probs)
        assert sum(probs) == 1


def test_tiling_probability_rejects_foreign_tiling():
    square = build_rectangle(2, 2)
    tiling = next(enumerate_tilings(square, 2))
    with pytest.raises(ValueError, match="different region"):
        tiling_probability(build_rectangle(2, 3), 2, tiling)
    with pytest.raises(ValueError, match="different region"):
        tiling_probability(build_stair(2, 2), 2, tiling)


@settings(max_examples=60, deadline=None)
@given(
    st.sets(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=12),
    st.integers(1, 3),
)
def test_count_matches_oracle_random_regions(cells, n):
    region = Region.from_cells(cells)
    want = count_tilings_oracle(region_cells(region), (n,))
    assert count_tilings(region, n) == want
    assert count_tilings(region, n, memo=False) == want
