"""Tile-adjacency graphs of ribbon-tileable regions and their orientations.

For a region tileable by n-ribbons, the number of tiles rooted at each level
is the same in every tiling, so tiles can be addressed by (level, rank) with
ranks counted left to right by root x.  The graph has one vertex per address
and an edge whenever two addresses are at most n levels apart.  Edge classes:

- same_level: both endpoints on one level; always oriented by rank.
- forced_n:   exactly n levels apart; the geometry fixes one direction,
              identical in every tiling.
- free:       1..n-1 levels apart; each tiling orients these via the light
              rule, and tilings correspond one-to-one with the acyclic
              orientations that extend the fixed (tau) directions.

The light rule: two tiles whose root levels are 1..n-1 apart always share at
least one anti-diagonal, and whichever tile owns the more western cell on the
shared anti-diagonals lies to the left.  The comparison is pairwise; tiles
sitting between the two are irrelevant.  Arcs here always point from the left
tile to the right tile.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

from .enumeration import NotTileableError, count_tilings, enumerate_tilings
from .region import Cell, Region, Tile, Tiling

SAME_LEVEL = "same_level"
FREE = "free"
FORCED = "forced_n"


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed a configured search limit."""


class GraphInconsistencyError(RuntimeError):
    """Raised when a tiling and a graph disagree in a way that should be impossible."""


class VertexId(NamedTuple):
    level: int
    rank: int


@dataclass(frozen=True)
class SEdge:
    u: VertexId
    v: VertexId
    cls: str

    def __post_init__(self) -> None:
        if (self.u.level, self.u.rank) >= (self.v.level, self.v.rank):
            raise ValueError("edge endpoints must be ordered by (level, rank)")


@dataclass(frozen=True)
class SGraph:
    """Vertices, classed edges, and the tiling-independent arc set tau."""

    n: int
    vertices: tuple[VertexId, ...]
    edges: tuple[SEdge, ...]
    tau: frozenset[tuple[VertexId, VertexId]]

    @property
    def free_edges(self) -> tuple[SEdge, ...]:
        return tuple(e for e in self.edges if e.cls == FREE)

    def edge_class(self, a: VertexId, b: VertexId) -> str | None:
        return self._class_by_pair.get(frozenset((a, b)))

    @property
    def _class_by_pair(self) -> dict[frozenset, str]:
        cached = self.__dict__.get("_pairs")
        if cached is None:
            cached = {frozenset((e.u, e.v)): e.cls for e in self.edges}
            self.__dict__["_pairs"] = cached
        return cached

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "vertices": [[v.level, v.rank] for v in self.vertices],
            "edges": [
                {"u": [e.u.level, e.u.rank], "v": [e.v.level, e.v.rank], "class": e.cls}
                for e in self.edges
            ],
            "tau": sorted(
                [[a.level, a.rank], [b.level, b.rank]] for a, b in self.tau
            ),
        }


def _label_tiles(tiling: Tiling) -> dict[VertexId, Tile]:
    """Address each tile as (root level, left-to-right rank within the level)."""
    by_level: dict[int, list[Tile]] = {}
    for tile in tiling.tiles:
        by_level.setdefault(tile.root.level, []).append(tile)
    labels: dict[VertexId, Tile] = {}
    for level, tiles in by_level.items():
        for rank, tile in enumerate(sorted(tiles, key=lambda t: t.root.x), start=1):
            labels[VertexId(level, rank)] = tile
    return labels


def tile_levels(region: Region, n: int) -> dict[int, int]:
    """Number of tiles rooted at each level (a tiling-independent profile)."""
    first = next(enumerate_tilings(region, n), None)
    if first is None:
        raise NotTileableError(f"region of area {region.area} has no {n}-ribbon tiling")
    profile: dict[int, int] = {}
    for tile in first.tiles:
        profile[tile.root.level] = profile.get(tile.root.level, 0) + 1
    return dict(sorted(profile.items()))


def _forced_arc(u: VertexId, u_tile: Tile, v: VertexId, v_tile: Tile) -> tuple[VertexId, VertexId]:
    """Direction of an exactly-n-apart pair, read off one tiling.

    With u the lower tile, v sits to u's right exactly when v's root lies
    strictly east of u's top cell; the arc runs left tile -> right tile.
    """
    if u.level > v.level:
        u, v = v, u
        u_tile, v_tile = v_tile, u_tile
    return (u, v) if v_tile.root.x > u_tile.top.x else (v, u)


def build_graph(region: Region, n: int) -> SGraph:
    """Construct the tile-adjacency graph from the region's first tiling."""
    first = next(enumerate_tilings(region, n), None)
    if first is None:
        raise NotTileableError(f"region of area {region.area} has no {n}-ribbon tiling")
    labels = _label_tiles(first)
    vertices = tuple(sorted(labels))
    edges: list[SEdge] = []
    tau: set[tuple[VertexId, VertexId]] = set()
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            gap = v.level - u.level
            if gap > n:
                continue
            if gap == 0:
                edges.append(SEdge(u, v, SAME_LEVEL))
                tau.add((u, v))  # ranks ascend left to right
            elif gap == n:
                edges.append(SEdge(u, v, FORCED))
                tau.add(_forced_arc(u, labels[u], v, labels[v]))
            else:
                edges.append(SEdge(u, v, FREE))
    graph = SGraph(n=n, vertices=vertices, edges=tuple(edges), tau=frozenset(tau))
    if not is_acyclic(graph.vertices, graph.tau):
        raise GraphInconsistencyError("fixed arc set tau contains a directed cycle")
    return graph


def is_acyclic(vertices: Iterable[VertexId], arcs: Iterable[tuple[VertexId, VertexId]]) -> bool:
    out: dict[VertexId, list[VertexId]] = {v: [] for v in vertices}
    for a, b in arcs:
        out[a].append(b)
    state: dict[VertexId, int] = {}  # 1 = on stack, 2 = done
    for start in out:
        if state.get(start):
            continue
        stack: list[tuple[VertexId, Iterator[VertexId]]] = [(start, iter(out[start]))]
        state[start] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if state.get(nxt) == 1:
                    return False
                if not state.get(nxt):
                    state[nxt] = 1
                    stack.append((nxt, iter(out[nxt])))
                    advanced = True
                    break
            if not advanced:
                state[node] = 2
                stack.pop()
    return True


def _light_arc(u: VertexId, u_tile: Tile, v: VertexId, v_tile: Tile) -> tuple[VertexId, VertexId]:
    """Orient a free edge by the light rule.

    Light travels north-west along anti-diagonals, so a ray from one tile's
    cell reaches the other tile exactly when the other's cell on that shared
    level lies further west.  The tiles overlap in levels (their roots are
    less than n apart), and the western tile must be the same on every
    shared level; the arc runs from it to the eastern tile.
    """
    u_x = {c.level: c.x for c in u_tile.cells()}
    v_x = {c.level: c.x for c in v_tile.cells()}
    shared = u_x.keys() & v_x.keys()
    if not shared:
        raise GraphInconsistencyError(f"tiles {u} and {v} share no level")
    verdicts = {u_x[level] < v_x[level] for level in shared}
    if len(verdicts) != 1:
        raise GraphInconsistencyError(
            f"light rule gives both directions for edge {u}-{v}"
        )
    return (u, v) if verdicts.pop() else (v, u)


def orientation_from_tiling(tiling: Tiling, graph: SGraph) -> frozenset[tuple[VertexId, VertexId]]:
    """The acyclic orientation this tiling induces on the graph's edges.

    Fixed (tau) arcs are copied; each free edge is oriented by the light
    rule.  Raises GraphInconsistencyError if the tiling's level profile does
    not match the graph, if the light rule is ambiguous on some free edge,
    or if the result contains a cycle.
    """
    labels = _label_tiles(tiling)
    if set(labels) != set(graph.vertices):
        raise GraphInconsistencyError("tiling level profile does not match graph vertices")
    arcs: set[tuple[VertexId, VertexId]] = set(graph.tau)
    for edge in graph.edges:
        if edge.cls == FREE:
            arcs.add(_light_arc(edge.u, labels[edge.u], edge.v, labels[edge.v]))
    result = frozenset(arcs)
    if not is_acyclic(graph.vertices, result):
        raise GraphInconsistencyError("induced orientation contains a cycle")
    return result


def count_admissible_orientations(graph: SGraph, free_edge_limit: int = 30) -> int:
    """Number of acyclic orientations of the graph that extend tau.

    Exhaustive over the free edges with incremental cycle detection.  Any
    acyclic partial assignment extends to a full acyclic orientation (orient
    the rest along a topological order), so the search tree carries no dead
    subtrees and runtime is proportional to the result.
    """
    free = graph.free_edges
    if len(free) > free_edge_limit:
        raise ResourceLimitError(
            f"{len(free)} free edges exceed the limit of {free_edge_limit}"
        )
    if not is_acyclic(graph.vertices, graph.tau):
        raise GraphInconsistencyError("fixed arc set tau contains a directed cycle")
    out: dict[VertexId, set[VertexId]] = {v: set() for v in graph.vertices}
    for a, b in graph.tau:
        out[a].add(b)

    def reachable(src: VertexId, dst: VertexId) -> bool:
        if src == dst:
            return True
        stack = [src]
        seen = {src}
        while stack:
            for nxt in out[stack.pop()]:
                if nxt == dst:
                    return True
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return False

    def assign(i: int) -> int:
        if i == len(free):
            return 1
        edge = free[i]
        total = 0
        for a, b in ((edge.u, edge.v), (edge.v, edge.u)):
            if not reachable(b, a):  # a -> b stays acyclic
                out[a].add(b)
                total += assign(i + 1)
                out[a].remove(b)
        return total

    return assign(0)


# ---------------------------------------------------------------------------
# Chromatic polynomials


@dataclass(frozen=True)
class ChromaticPoly:
    """Integer polynomial, coefficients ascending; degree = vertex count."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value


def _pmul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _psub(a: list[int], b: list[int]) -> list[int]:
    size = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(size)]


def falling_factorial_poly(k: int) -> list[int]:
    """Coefficients of x(x-1)...(x-k+1), ascending."""
    poly = [1]
    for i in range(k):
        poly = _pmul(poly, [-i, 1])
    return poly


def _components(adj: dict[int, set[int]]) -> list[set[int]]:
    seen: set[int] = set()
    comps = []
    for v in adj:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in comp:
                    comp.add(nb)
                    stack.append(nb)
        seen |= comp
        comps.append(comp)
    return comps


def _chromatic(adj: dict[int, set[int]]) -> list[int]:
    v = len(adj)
    m = sum(len(nbs) for nbs in adj.values()) // 2
    if m == 0:
        return [0] * v + [1]
    if m == v * (v - 1) // 2:
        return falling_factorial_poly(v)
    comps = _components(adj)
    if len(comps) > 1:
        poly = [1]
        for comp in comps:
            poly = _pmul(poly, _chromatic({x: adj[x] & comp for x in comp}))
        return poly
    # deletion-contraction on an edge at a highest-degree vertex
    a = max(adj, key=lambda x: len(adj[x]))
    b = max(adj[a], key=lambda x: len(adj[x]))
    deleted = {x: set(nbs) for x, nbs in adj.items()}
    deleted[a].discard(b)
    deleted[b].discard(a)
    contracted: dict[int, set[int]] = {}
    for x, nbs in adj.items():
        if x == b:
            continue
        merged = {a if nb == b else nb for nb in nbs}
        contracted[x] = merged - {x}
    contracted[a] = (adj[a] | adj[b]) - {a, b}
    return _psub(_chromatic(deleted), _chromatic(contracted))


def chromatic_polynomial(graph, edges: Iterable[tuple] | None = None) -> ChromaticPoly:
    """Chromatic polynomial by deletion-contraction.

    Accepts either an SGraph (edge classes ignored, orientations dropped) or
    a (vertices, edges) pair of hashables.
    """
    if edges is None and isinstance(graph, SGraph):
        vertices: list = list(graph.vertices)
        pairs = [(e.u, e.v) for e in graph.edges]
    else:
        vertices = list(graph)
        pairs = [(a, b) for a, b in edges or []]
    index = {v: i for i, v in enumerate(vertices)}
    adj: dict[int, set[int]] = {i: set() for i in range(len(vertices))}
    for a, b in pairs:
        if a == b:
            raise ValueError(f"loop at {a!r} has no proper colorings")
        adj[index[a]].add(index[b])
        adj[index[b]].add(index[a])
    return ChromaticPoly(tuple(_chromatic(adj)))


def acyclic_count_via_chromatic(graph, edges: Iterable[tuple] | None = None) -> int:
    """Number of acyclic orientations of an undirected graph: |chi(-1)|."""
    return abs(chromatic_polynomial(graph, edges)(-1))


# ---------------------------------------------------------------------------
# Isomorphism


def _edge_tables(graph: SGraph) -> tuple[dict, dict]:
    pair_class = {frozenset((e.u, e.v)): e.cls for e in graph.edges}
    return pair_class, {arc: True for arc in graph.tau}


def _refine_colors(graph: SGraph) -> dict[VertexId, int]:
    incident: dict[VertexId, list[tuple[str, str, VertexId]]] = {v: [] for v in graph.vertices}
    tau = set(graph.tau)
    for e in graph.edges:
        if e.cls == FREE:
            du = dv = "-"
        else:
            du, dv = ("out", "in") if (e.u, e.v) in tau else ("in", "out")
        incident[e.u].append((e.cls, du, e.v))
        incident[e.v].append((e.cls, dv, e.u))
    color = {v: 0 for v in graph.vertices}
    while True:
        signatures = {
            v: (color[v], tuple(sorted((cls, d, color[nb]) for cls, d, nb in incident[v])))
            for v in graph.vertices
        }
        palette = {sig: i for i, sig in enumerate(sorted(set(signatures.values())))}
        new_color = {v: palette[signatures[v]] for v in graph.vertices}
        if len(set(new_color.values())) == len(set(color.values())):
            return new_color
        color = new_color


def graphs_isomorphic(g1: SGraph, g2: SGraph) -> tuple[bool, dict[VertexId, VertexId] | None]:
    """Isomorphism preserving edge classes and tau directions; returns a witness.

    Vertex levels and ranks need not correspond; only the classed, partially
    directed structure must.
    """
    if len(g1.vertices) != len(g2.vertices) or len(g1.edges) != len(g2.edges):
        return (False, None)
    by_class1 = sorted(e.cls for e in g1.edges)
    by_class2 = sorted(e.cls for e in g2.edges)
    if by_class1 != by_class2:
        return (False, None)
    # The refinement is deterministic, so color ids are comparable across
    # isomorphic graphs and a census mismatch is a definite no.
    colors1 = _refine_colors(g1)
    colors2 = _refine_colors(g2)
    census1 = sorted((c, list(colors1.values()).count(c)) for c in set(colors1.values()))
    census2 = sorted((c, list(colors2.values()).count(c)) for c in set(colors2.values()))
    if census1 != census2:
        return (False, None)
    pairs1, tau1 = _edge_tables(g1)
    pairs2, tau2 = _edge_tables(g2)
    candidates = {
        v: [w for w in g2.vertices if colors2[w] == colors1[v]] for v in g1.vertices
    }
    order = sorted(g1.vertices, key=lambda v: len(candidates[v]))
    mapping: dict[VertexId, VertexId] = {}
    used: set[VertexId] = set()

    def compatible(v: VertexId, w: VertexId) -> bool:
        for prev, image in mapping.items():
            cls1 = pairs1.get(frozenset((v, prev)))
            cls2 = pairs2.get(frozenset((w, image)))
            if cls1 != cls2:
                return False
            if cls1 is not None and cls1 != FREE:
                if ((v, prev) in tau1) != ((w, image) in tau2):
                    return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used or not compatible(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if search(i + 1):
                return True
            del mapping[v]
            used.remove(w)
        return False

    if search(0):
        return (True, dict(mapping))
    return (False, None)


# ---------------------------------------------------------------------------
# Verification reports


@dataclass(frozen=True)
class BijectionReport:
    tiling_count: int
    orientation_count: int
    injective: bool
    all_extend_tau: bool

    @property
    def ok(self) -> bool:
        return (
            self.tiling_count == self.orientation_count
            and self.injective
            and self.all_extend_tau
        )


def verify_bijection(region: Region, n: int, free_edge_limit: int = 30) -> BijectionReport:
    """Check tilings map one-to-one onto the admissible acyclic orientations.

    Enumerates every tiling, so the region must be small enough for that.
    """
    total = count_tilings(region, n)
    if total == 0:
        raise NotTileableError(f"region of area {region.area} has no {n}-ribbon tiling")
    graph = build_graph(region, n)
    admissible = count_admissible_orientations(graph, free_edge_limit)
    seen: set[frozenset] = set()
    all_extend = True
    for tiling in enumerate_tilings(region, n):
        orientation = orientation_from_tiling(tiling, graph)
        if not orientation >= graph.tau:
            all_extend = False
        seen.add(orientation)
    return BijectionReport(
        tiling_count=total,
        orientation_count=admissible,
        injective=len(seen) == total,
        all_extend_tau=all_extend,
    )


@dataclass(frozen=True)
class LevelGrowth:
    level: int
    tiles_at_level: int
    window_tiles: int
    growth: Fraction
    binom_bound: int
    en_bound: float | None
    ok: bool


@dataclass(frozen=True)
class GrowthReport:
    n: int
    counts: tuple[int, ...]
    rows: tuple[LevelGrowth, ...]

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)


def _induced(graph: SGraph, keep: set[VertexId]) -> SGraph:
    return SGraph(
        n=graph.n,
        vertices=tuple(v for v in graph.vertices if v in keep),
        edges=tuple(e for e in graph.edges if e.u in keep and e.v in keep),
        tau=frozenset((a, b) for a, b in graph.tau if a in keep and b in keep),
    )


def verify_growth_bounds(region: Region, n: int, free_edge_limit: int = 30) -> GrowthReport:
    """Check level-by-level growth of admissible orientation counts.

    For a rectangle whose row count is a multiple of n, let H_l be the
    subgraph induced by vertices of level <= l and A_l its admissible
    orientation count.  Each ratio g_l = A_l / A_{l-1} must satisfy
    g_l <= C(S_l, T_l), with T_l the vertices at level l and S_l the total
    over levels l-n+1..l; and g_l <= (e*n)^{T_l} up to the last level of
    maximal T_l.
    """
    if not region.is_rectangle():
        raise ValueError("growth bounds are defined for rectangles")
    _, _, max_x, max_y = region.bounds
    if (max_y + 1) % n:
        raise ValueError(f"row count {max_y + 1} is not a multiple of n={n}")
    graph = build_graph(region, n)
    tiles_per_level: dict[int, int] = {}
    for v in graph.vertices:
        tiles_per_level[v.level] = tiles_per_level.get(v.level, 0) + 1
    top = max(tiles_per_level)
    t_max = max(tiles_per_level.values())
    last_widest = max(l for l, t in tiles_per_level.items() if t == t_max)
    counts = []
    for level in range(top + 1):
        keep = {v for v in graph.vertices if v.level <= level}
        counts.append(count_admissible_orientations(_induced(graph, keep), free_edge_limit))
    rows = []
    for level in range(1, top + 1):
        t_l = tiles_per_level.get(level, 0)
        s_l = sum(tiles_per_level.get(k, 0) for k in range(level - n + 1, level + 1))
        growth = Fraction(counts[level], counts[level - 1])
        binom = math.comb(s_l, t_l)
        en = (math.e * n) ** t_l if level <= last_widest else None
        ok = growth <= binom and (en is None or float(growth) <= en)
        rows.append(
            LevelGrowth(
                level=level,
                tiles_at_level=t_l,
                window_tiles=s_l,
                growth=growth,
                binom_bound=binom,
                en_bound=en,
                ok=ok,
            )
        )
    return GrowthReport(n=n, counts=tuple(counts), rows=tuple(rows))


def to_dot(graph: SGraph) -> str:
    """Graphviz rendering: tau arcs solid and directed, free edges dashed."""
    tau = set(graph.tau)

    def name(v: VertexId) -> str:
        return f"L{v.level}R{v.rank}"

    lines = ["digraph ribbon_tile_graph {", "  rankdir=BT;"]
    for v in graph.vertices:
        lines.append(f'  {name(v)} [label="({v.level},{v.rank})"];')
    for e in graph.edges:
        if e.cls == FREE:
            lines.append(f"  {name(e.u)} -> {name(e.v)} [style=dashed, dir=none];")
        else:
            a, b = (e.u, e.v) if (e.u, e.v) in tau else (e.v, e.u)
            lines.append(f'  {name(a)} -> {name(b)} [style=solid, class="{e.cls}"];')
    lines.append("}")
    return "\n".join(lines)
