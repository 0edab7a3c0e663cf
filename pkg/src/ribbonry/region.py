"""Lattice regions, ribbon shapes, tiles, and tilings.

Coordinates are unit squares on the integer lattice, addressed by their
lower-left corner (x, y).  The level of a cell is x + y, so anti-diagonals
are level sets.  An n-ribbon is a connected strip of n cells in which each
cell after the first sits directly east or directly north of its
predecessor; it therefore meets n consecutive levels, one cell per level,
and its unique minimal-level cell is called the root.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

EAST = "E"
NORTH = "N"


class Cell(NamedTuple):
    x: int
    y: int

    @property
    def level(self) -> int:
        return self.x + self.y

    def east(self) -> "Cell":
        return Cell(self.x + 1, self.y)

    def north(self) -> "Cell":
        return Cell(self.x, self.y + 1)


@dataclass(frozen=True)
class RibbonShape:
    """Shape of a ribbon: a word over {E, N} giving the successive steps.

    The empty word is the monomino.  A length-n ribbon has n-1 steps, so
    there are 2^(n-1) shapes of each length.
    """

    moves: str = ""

    def __post_init__(self) -> None:
        bad = set(self.moves) - {EAST, NORTH}
        if bad:
            raise ValueError(f"shape moves must be E or N, got {sorted(bad)!r}")

    @property
    def length(self) -> int:
        return len(self.moves) + 1

    @classmethod
    def from_word(cls, word: str, n: int) -> "RibbonShape":
        """Decode an (n-1)-bit word: bit 0 is an east step, bit 1 a north step."""
        if len(word) != n - 1:
            raise ValueError(f"need {n - 1} bits for a {n}-ribbon, got {len(word)}")
        bad = set(word) - {"0", "1"}
        if bad:
            raise ValueError(f"shape word must be binary, got {sorted(bad)!r}")
        return cls("".join(NORTH if b == "1" else EAST for b in word))

    def to_word(self) -> str:
        return "".join("1" if m == NORTH else "0" for m in self.moves)

    @staticmethod
    def all_shapes(n: int) -> list["RibbonShape"]:
        """All 2^(n-1) shapes of length n, in lexicographic word order."""
        if n < 1:
            raise ValueError(f"ribbon length must be positive, got {n}")
        return [
            RibbonShape.from_word(format(w, f"0{n - 1}b") if n > 1 else "", n)
            for w in range(1 << (n - 1))
        ]


@dataclass(frozen=True)
class Tile:
    """A concrete ribbon: a shape placed with its root at a cell."""

    root: Cell
    shape: RibbonShape

    @property
    def length(self) -> int:
        return self.shape.length

    def cells(self) -> tuple[Cell, ...]:
        """Cells in walk order; levels are root.level, root.level+1, ..."""
        out = [self.root]
        for move in self.shape.moves:
            out.append(out[-1].north() if move == NORTH else out[-1].east())
        return tuple(out)

    @property
    def top(self) -> Cell:
        """The unique maximal-level cell."""
        return self.cells()[-1]

    def to_json_dict(self) -> dict:
        return {"root": [self.root.x, self.root.y], "moves": self.shape.moves}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Tile":
        x, y = data["root"]
        return cls(Cell(int(x), int(y)), RibbonShape(data["moves"]))


class RegionParseError(ValueError):
    """Raised on malformed grid text."""


@dataclass(frozen=True)
class Region:
    """A finite set of cells, normalized so min x = min y = 0."""

    cells: frozenset[Cell]

    @classmethod
    def from_cells(cls, cells: Iterable[tuple[int, int]]) -> "Region":
        raw = {Cell(int(x), int(y)) for x, y in cells}
        if not raw:
            raise ValueError("region must contain at least one cell")
        dx = min(c.x for c in raw)
        dy = min(c.y for c in raw)
        return cls(frozenset(Cell(c.x - dx, c.y - dy) for c in raw))

    @cached_property
    def area(self) -> int:
        return len(self.cells)

    @cached_property
    def bounds(self) -> tuple[int, int, int, int]:
        """(min_x, min_y, max_x, max_y); the minima are 0 by normalization."""
        xs = [c.x for c in self.cells]
        ys = [c.y for c in self.cells]
        return (min(xs), min(ys), max(xs), max(ys))

    @cached_property
    def level_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for c in self.cells:
            hist[c.level] = hist.get(c.level, 0) + 1
        return dict(sorted(hist.items()))

    @cached_property
    def sorted_cells(self) -> tuple[Cell, ...]:
        """Cells in canonical (level, x) order."""
        return tuple(sorted(self.cells, key=lambda c: (c.level, c.x)))

    @cached_property
    def is_connected(self) -> bool:
        return self._flood(self.cells, next(iter(self.cells))) == self.cells

    @cached_property
    def is_simply_connected(self) -> bool:
        """True iff the complement within an inflated bounding frame is connected."""
        min_x, min_y, max_x, max_y = self.bounds
        frame = {
            Cell(x, y)
            for x in range(min_x - 1, max_x + 2)
            for y in range(min_y - 1, max_y + 2)
            if Cell(x, y) not in self.cells
        }
        return self._flood(frame, Cell(min_x - 1, min_y - 1)) == frame

    @staticmethod
    def _flood(cells: frozenset[Cell] | set[Cell], start: Cell) -> set[Cell]:
        seen = {start}
        stack = [start]
        while stack:
            x, y = stack.pop()
            for nb in (Cell(x + 1, y), Cell(x - 1, y), Cell(x, y + 1), Cell(x, y - 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return seen

    def is_rectangle(self) -> bool:
        min_x, min_y, max_x, max_y = self.bounds
        return self.area == (max_x - min_x + 1) * (max_y - min_y + 1)

    def to_text(self) -> str:
        """Grid picture, one row per line, top row first, '#' cell / '.' gap."""
        _, _, max_x, max_y = self.bounds
        rows = []
        for y in range(max_y, -1, -1):
            rows.append("".join("#" if Cell(x, y) in self.cells else "." for x in range(max_x + 1)))
        return "\n".join(rows)

    def to_json_dict(self) -> dict:
        return {"cells": [[c.x, c.y] for c in sorted(self.cells)]}

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.sorted_cells)


def parse_region(text: str) -> Region:
    """Parse a grid of '#' (cell) and '.' (gap); the last line is the y=0 row.

    Lines may be ragged; anything past a short line's end is a gap.  Raises
    RegionParseError on characters outside {#, .} or on an empty grid.
    """
    lines = text.splitlines()
    cells: list[tuple[int, int]] = []
    height = len(lines)
    for row, line in enumerate(lines):
        for col, ch in enumerate(line):
            if ch == "#":
                cells.append((col, height - 1 - row))
            elif ch != ".":
                raise RegionParseError(
                    f"illegal character {ch!r} at line {row + 1}, column {col + 1}"
                )
    if not cells:
        raise RegionParseError("grid contains no cells")
    return Region.from_cells(cells)


def build_rectangle(rows: int, cols: int) -> Region:
    """The rows x cols rectangle with lower-left corner at the origin."""
    if rows < 1 or cols < 1:
        raise ValueError(f"rectangle sides must be positive, got {rows}x{cols}")
    return Region.from_cells((x, y) for x in range(cols) for y in range(rows))


def build_aztec(size: int, n: int, k: int = 0) -> Region:
    """Generalized Aztec diamond AD(size, n, k) of area n*size*(size+1).

    Column x in 0..2*size-1 is a bar of n*min(x+1, 2*size-x) cells.  Left-half
    bottoms descend one per column to 0; the right half starts at offset k and
    each further column steps up by n-1.  AD(size, 2, 0) is the classical
    Aztec diamond of order `size`.
    """
    if size < 1:
        raise ValueError(f"size must be positive, got {size}")
    if n < 2:
        raise ValueError(f"ribbon length must be at least 2, got {n}")
    if not 0 <= k <= n - 2:
        raise ValueError(f"offset must be in [0, {n - 2}], got {k}")
    bottoms: dict[int, int] = {x: size - 1 - x for x in range(size)}
    bottoms[size] = k
    for x in range(size, 2 * size - 1):
        bottoms[x + 1] = bottoms[x] + (n - 1)
    cells = []
    for x in range(2 * size):
        height = n * min(x + 1, 2 * size - x)
        cells.extend((x, y) for y in range(bottoms[x], bottoms[x] + height))
    return Region.from_cells(cells)


def build_stair(rows: int, row_length: int) -> Region:
    """Staircase of `rows` rows of `row_length` cells, each shifted one right.

    Row r occupies cells (r+j, r) for 0 <= j < row_length.
    """
    if rows < 1 or row_length < 1:
        raise ValueError(f"stair parameters must be positive, got {rows}, {row_length}")
    return Region.from_cells((r + j, r) for r in range(rows) for j in range(row_length))


@dataclass(frozen=True)
class Tiling:
    """A partition of a region into ribbon tiles, in canonical root order."""

    region: Region
    tiles: tuple[Tile, ...]

    def validate(self) -> None:
        """Check the tiles partition the region and roots ascend by (level, x)."""
        covered: set[Cell] = set()
        for tile in self.tiles:
            for cell in tile.cells():
                if cell not in self.region:
                    raise ValueError(f"tile cell {cell} lies outside the region")
                if cell in covered:
                    raise ValueError(f"cell {cell} covered twice")
                covered.add(cell)
        if covered != set(self.region.cells):
            missing = sorted(set(self.region.cells) - covered)[:3]
            raise ValueError(f"cells left uncovered, e.g. {missing}")
        roots = [(t.root.level, t.root.x) for t in self.tiles]
        if roots != sorted(roots):
            raise ValueError("tiles are not in canonical root order")

    def to_json_dict(self) -> dict:
        return {"tiles": [t.to_json_dict() for t in self.tiles]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json_dict(cls, data: dict) -> "Tiling":
        tiles = [Tile.from_json_dict(t) for t in data["tiles"]]
        if not tiles:
            raise ValueError("tiling has no tiles")
        cells = [cell for tile in tiles for cell in tile.cells()]
        dx = min(c.x for c in cells)
        dy = min(c.y for c in cells)
        tiles = [Tile(Cell(t.root.x - dx, t.root.y - dy), t.shape) for t in tiles]
        region = Region.from_cells((c.x - dx, c.y - dy) for c in cells)
        tiling = cls(region, tuple(sorted(tiles, key=lambda t: (t.root.level, t.root.x))))
        tiling.validate()
        return tiling

    @classmethod
    def from_json(cls, text: str) -> "Tiling":
        return cls.from_json_dict(json.loads(text))
