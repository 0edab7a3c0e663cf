"""Exact counting, streaming enumeration, and uniform sampling of ribbon tilings.

The search places one tile at a time, always rooted at the uncovered cell
that is minimal in (level, x) order.  Any ribbon covering that cell must be
rooted there (a ribbon meets one cell per level, so a root at a lower level
would itself be an uncovered cell of lower level), which makes the search
exhaustive and duplicate-free.

Counting memoizes on a frontier key: once the minimal uncovered cell sits at
level L, every cell below level L is covered and no cell at level >= L + n
can be covered yet, so the occupancy restricted to the band of levels
[L, L + n - 1] determines the whole state.
"""

from __future__ import annotations

import math
import os
import random
from bisect import bisect_left
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .region import Cell, Region, RibbonShape, Tile, Tiling

MEMO_LIMIT_ENV = "RIBBONRY_MEMO_LIMIT"

# Rough bytes per memo entry: key tuple, band int, count int, dict slot.
_MEMO_ENTRY_BYTES = 160


class NotTileableError(ValueError):
    """Raised when an operation needs a tiling of a region that has none."""


@dataclass(frozen=True)
class Occupancy:
    """A region together with the set of cells already covered."""

    region: Region
    covered: frozenset[Cell]

    def __post_init__(self) -> None:
        stray = self.covered - self.region.cells
        if stray:
            raise ValueError(f"covered cells outside region, e.g. {sorted(stray)[:3]}")

    @property
    def is_complete(self) -> bool:
        return len(self.covered) == self.region.area


def min_uncovered_cell(occupancy: Occupancy) -> Cell:
    """The uncovered cell minimal in (level, x) order."""
    free = occupancy.region.cells - occupancy.covered
    if not free:
        raise ValueError("occupancy is complete")
    return min(free, key=lambda c: (c.level, c.x))


def placements_at(occupancy: Occupancy, cell: Cell, lengths: Iterable[int]) -> list[Tile]:
    """Tiles rooted at `cell` that fit the free cells, with length in `lengths`.

    Order is canonical: a shape precedes its extensions, and at equal length
    words sort with E before N.
    """
    wanted = set(lengths)
    if not wanted or min(wanted) < 1:
        raise ValueError("lengths must be positive")
    free = occupancy.region.cells - occupancy.covered
    if cell not in free:
        raise ValueError(f"cell {cell} is not free")
    out: list[Tile] = []
    limit = max(wanted)

    def extend(at: Cell, moves: str) -> None:
        length = len(moves) + 1
        if length in wanted:
            out.append(Tile(cell, RibbonShape(moves)))
        if length == limit:
            return
        for mv, nxt in (("E", at.east()), ("N", at.north())):
            if nxt in free:
                extend(nxt, moves + mv)

    extend(cell, "")
    return out


def _memo_limit_from_env(default: int | None) -> int | None:
    raw = os.environ.get(MEMO_LIMIT_ENV)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MEMO_LIMIT_ENV} must be an integer byte count, got {raw!r}")


class _Searcher:
    """Shared machinery over one region and one set of admissible lengths."""

    def __init__(
        self,
        region: Region,
        lengths: Iterable[int],
        *,
        memo: bool = True,
        memo_limit: int | None = None,
        prune: bool = False,
    ) -> None:
        self.region = region
        self.lengths = frozenset(lengths)
        if not self.lengths or min(self.lengths) < 1:
            raise ValueError("lengths must be positive")
        self.max_len = max(self.lengths)
        self.order = region.sorted_cells
        self.index = {c: i for i, c in enumerate(self.order)}
        self.full = (1 << region.area) - 1
        self.levels = [c.level for c in self.order]
        self.use_memo = memo
        self.prune = prune
        self.memo: dict[tuple[int, int], int] = {}
        self.minimal_memo: dict[tuple[int, int], tuple[int, int]] = {}
        limit = _memo_limit_from_env(memo_limit)
        self.max_entries = None if limit is None else max(limit // _MEMO_ENTRY_BYTES, 0)
        self.placements = [self._placements_for(i) for i in range(region.area)]

    def _placements_for(self, root_index: int) -> list[tuple[Tile, int]]:
        root = self.order[root_index]
        out: list[tuple[Tile, int]] = []

        def extend(at: Cell, moves: str, mask: int) -> None:
            length = len(moves) + 1
            if length in self.lengths:
                out.append((Tile(root, RibbonShape(moves)), mask))
            if length == self.max_len:
                return
            for mv, nxt in (("E", at.east()), ("N", at.north())):
                j = self.index.get(nxt)
                if j is not None:
                    extend(nxt, moves + mv, mask | (1 << j))

        extend(root, "", 1 << root_index)
        return out

    def _key(self, covered: int, lowest: int) -> tuple[int, int]:
        base = self.levels[lowest]
        start = bisect_left(self.levels, base)
        stop = bisect_left(self.levels, base + self.max_len)
        band = (covered >> start) & ((1 << (stop - start)) - 1)
        return (start, band)

    def _stranded(self, covered: int) -> bool:
        """True if some free pocket cannot be exactly covered for size reasons.

        Every ribbon is 4-connected, so each tile lies inside one connected
        pocket of free cells; a pocket whose size is not a multiple of the
        gcd of the admissible lengths can never be finished.
        """
        g = math.gcd(*self.lengths)
        if g == 1:
            return False
        free = [c for i, c in enumerate(self.order) if not covered >> i & 1]
        free_set = set(free)
        seen: set[Cell] = set()
        for cell in free:
            if cell in seen:
                continue
            pocket = Region._flood(free_set, cell)
            seen |= pocket
            if len(pocket) % g:
                return True
        return False

    def count(self, covered: int) -> int:
        if covered == self.full:
            return 1
        free_bits = self.full & ~covered
        lowest = (free_bits & -free_bits).bit_length() - 1
        if self.use_memo:
            key = self._key(covered, lowest)
            hit = self.memo.get(key)
            if hit is not None:
                return hit
        total = 0
        for _, mask in self.placements[lowest]:
            if mask & covered:
                continue
            if self.prune and self._stranded(covered | mask):
                continue
            total += self.count(covered | mask)
        if self.use_memo and (self.max_entries is None or len(self.memo) < self.max_entries):
            self.memo[key] = total
        return total

    def count_parallel(self, threads: int) -> int:
        free_bits = self.full
        lowest = (free_bits & -free_bits).bit_length() - 1
        branches = [mask for _, mask in self.placements[lowest]]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return sum(pool.map(self.count, branches))

    def minimal(self, covered: int) -> tuple[int, int]:
        """(fewest tiles to finish, number of ways); (area+1, 0) if stuck."""
        if covered == self.full:
            return (0, 1)
        key = None
        free_bits = self.full & ~covered
        lowest = (free_bits & -free_bits).bit_length() - 1
        if self.use_memo:
            key = self._key(covered, lowest)
            hit = self.minimal_memo.get(key)
            if hit is not None:
                return hit
        best = self.region.area + 1
        ways = 0
        for _, mask in self.placements[lowest]:
            if mask & covered:
                continue
            sub_best, sub_ways = self.minimal(covered | mask)
            sub_best += 1
            if sub_best < best:
                best, ways = sub_best, sub_ways
            elif sub_best == best:
                ways += sub_ways
        result = (best, ways)
        if key is not None and (
            self.max_entries is None or len(self.minimal_memo) < self.max_entries
        ):
            self.minimal_memo[key] = result
        return result

    def walk(self, covered: int, tiles: list[Tile]) -> Iterator[Tiling]:
        if covered == self.full:
            yield Tiling(self.region, tuple(tiles))
            return
        free_bits = self.full & ~covered
        lowest = (free_bits & -free_bits).bit_length() - 1
        for tile, mask in self.placements[lowest]:
            if mask & covered:
                continue
            tiles.append(tile)
            yield from self.walk(covered | mask, tiles)
            tiles.pop()


def count_tilings(
    region: Region,
    n: int,
    *,
    memo: bool = True,
    memo_limit: int | None = None,
    prune: bool = False,
    threads: int = 1,
) -> int:
    """Number of tilings of the region by n-ribbons (0 if there are none)."""
    if n < 1:
        raise ValueError(f"ribbon length must be positive, got {n}")
    if region.area % n:
        return 0
    searcher = _Searcher(region, [n], memo=memo, memo_limit=memo_limit, prune=prune)
    if threads > 1:
        return searcher.count_parallel(threads)
    return searcher.count(0)


def enumerate_tilings(region: Region, n: int) -> Iterator[Tiling]:
    """Stream every tiling exactly once, in canonical (root, shape-word) order."""
    if n < 1:
        raise ValueError(f"ribbon length must be positive, got {n}")
    if region.area % n:
        return
    searcher = _Searcher(region, [n], memo=False)
    yield from searcher.walk(0, [])


def is_tileable(region: Region, n: int) -> bool:
    """Whether at least one n-ribbon tiling exists.

    Rectangles short-circuit: an a x b rectangle is n-tileable iff n divides
    a or b.  Other regions fall back to counting.
    """
    if n < 1:
        raise ValueError(f"ribbon length must be positive, got {n}")
    if region.area % n:
        return False
    if region.is_rectangle():
        _, _, max_x, max_y = region.bounds
        return (max_y + 1) % n == 0 or (max_x + 1) % n == 0
    return count_tilings(region, n) > 0


def sample_tiling(region: Region, n: int, seed: int) -> Tiling:
    """Draw one tiling exactly uniformly at random, deterministic per seed.

    Each step places the tile at the minimal uncovered cell with probability
    proportional to the number of completions after it, so every full tiling
    comes out with probability exactly 1 / count_tilings.
    """
    if n < 1:
        raise ValueError(f"ribbon length must be positive, got {n}")
    if region.area % n:
        raise NotTileableError(f"area {region.area} is not a multiple of {n}")
    searcher = _Searcher(region, [n])
    total = searcher.count(0)
    if total == 0:
        raise NotTileableError(f"region of area {region.area} has no {n}-ribbon tiling")
    rng = random.Random(seed)
    covered = 0
    tiles: list[Tile] = []
    remaining = total
    while covered != searcher.full:
        free_bits = searcher.full & ~covered
        lowest = (free_bits & -free_bits).bit_length() - 1
        pick = rng.randrange(remaining)
        for tile, mask in searcher.placements[lowest]:
            if mask & covered:
                continue
            weight = searcher.count(covered | mask)
            if pick < weight:
                tiles.append(tile)
                covered |= mask
                remaining = weight
                break
            pick -= weight
        else:
            raise AssertionError("completion counts disagree with branch weights")
    return Tiling(region, tuple(tiles))


def tiling_probability(region: Region, n: int, tiling: Tiling) -> Fraction:
    """Exact probability the sampler assigns to `tiling` (1 / total count)."""
    tiling.validate()
    if tiling.region != region:
        raise ValueError("tiling covers a different region")
    searcher = _Searcher(region, [n])
    prob = Fraction(1)
    covered = 0
    for tile in tiling.tiles:
        before = searcher.count(covered)
        mask = 0
        for cell in tile.cells():
            mask |= 1 << searcher.index[cell]
        after = searcher.count(covered | mask)
        if before == 0 or after == 0:
            raise NotTileableError("tiling is not reachable by the sampler")
        prob *= Fraction(after, before)
        covered |= mask
    return prob


def count_variable(region: Region) -> int:
    """Number of tilings by ribbons of any length from 1 to the region's area."""
    searcher = _Searcher(region, range(1, region.area + 1))
    return searcher.count(0)


def count_minimal(region: Region) -> tuple[int, int]:
    """(fewest ribbons in any tiling, number of tilings using that few)."""
    searcher = _Searcher(region, range(1, region.area + 1))
    best, ways = searcher.minimal(0)
    return (best, ways)


def log2_big(value: int) -> float:
    """log2 of a positive integer of any size, accurate to float precision."""
    if value <= 0:
        raise ValueError(f"need a positive integer, got {value}")
    shift = max(value.bit_length() - 64, 0)
    return math.log2(value >> shift) + shift


def entropy(region: Region, n: int) -> float:
    """Per-tile entropy log2(count) / (area / n).

    Raises NotTileableError when the region has no n-ribbon tiling, since the
    entropy is undefined there.
    """
    count = count_tilings(region, n)
    if count == 0:
        raise NotTileableError(
            f"region of area {region.area} has no {n}-ribbon tiling; entropy undefined"
        )
    return log2_big(count) / (region.area // n)
