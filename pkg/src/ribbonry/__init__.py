"""ribbonry: exact counting, enumeration, and uniform sampling of ribbon tilings."""

from .region import (
    Cell,
    Region,
    RegionParseError,
    RibbonShape,
    Tile,
    Tiling,
    build_aztec,
    build_rectangle,
    build_stair,
    parse_region,
)
from .enumeration import (
    NotTileableError,
    Occupancy,
    count_minimal,
    count_tilings,
    count_variable,
    entropy,
    enumerate_tilings,
    is_tileable,
    log2_big,
    min_uncovered_cell,
    placements_at,
    sample_tiling,
    tiling_probability,
)
from .sheffield import (
    BijectionReport,
    ChromaticPoly,
    GraphInconsistencyError,
    GrowthReport,
    ResourceLimitError,
    SEdge,
    SGraph,
    VertexId,
    acyclic_count_via_chromatic,
    build_graph,
    chromatic_polynomial,
    count_admissible_orientations,
    graphs_isomorphic,
    is_acyclic,
    orientation_from_tiling,
    tile_levels,
    to_dot,
    verify_bijection,
    verify_growth_bounds,
)
from .formulas import (
    a_sequence,
    aztec_count,
    domino_strip_entropy,
    entropy_bounds,
    rect_strip_count,
    stair_count,
    stair_entropy_limit,
    stanley_fib_count,
    stanley_minimal_count,
)
from .render import tiling_to_ascii, tiling_to_svg

__version__ = "0.1.0"

__all__ = [
    "Cell",
    "Region",
    "RegionParseError",
    "RibbonShape",
    "Tile",
    "Tiling",
    "build_aztec",
    "build_rectangle",
    "build_stair",
    "parse_region",
    "NotTileableError",
    "Occupancy",
    "count_minimal",
    "count_tilings",
    "count_variable",
    "entropy",
    "enumerate_tilings",
    "is_tileable",
    "log2_big",
    "min_uncovered_cell",
    "placements_at",
    "sample_tiling",
    "tiling_probability",
    "BijectionReport",
    "ChromaticPoly",
    "GraphInconsistencyError",
    "GrowthReport",
    "ResourceLimitError",
    "SEdge",
    "SGraph",
    "VertexId",
    "acyclic_count_via_chromatic",
    "build_graph",
    "chromatic_polynomial",
    "count_admissible_orientations",
    "graphs_isomorphic",
    "is_acyclic",
    "orientation_from_tiling",
    "tile_levels",
    "to_dot",
    "verify_bijection",
    "verify_growth_bounds",
    "a_sequence",
    "aztec_count",
    "domino_strip_entropy",
    "entropy_bounds",
    "rect_strip_count",
    "stair_count",
    "stair_entropy_limit",
    "stanley_fib_count",
    "stanley_minimal_count",
    "tiling_to_ascii",
    "tiling_to_svg",
    "__version__",
]
