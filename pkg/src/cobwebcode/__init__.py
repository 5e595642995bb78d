"""Base-F mixed-radix numerals, cobweb posets and their hyper-box tilings."""

from .errors import *  # noqa: F401,F403
from .sequences import (
    FSequence,
    parse_sequence,
    value,
    rising_factorial,
    f_factorial,
    falling_factorial,
    fnomial,
    is_admissible,
)
from .fbase import (
    FBaseNumeral,
    LT,
    EQ,
    GT,
    decode,
    encode,
    successor,
    add,
    compare_lexV,
    max_prefix_numeral,
    zeckendorf,
    zeckendorf_terms,
    decode_not_upside_down,
    format_numeral,
    parse_numeral,
    numeral_to_json,
    numeral_from_json,
)
from .cobweb import (
    Vertex,
    HasseDigraph,
    HyperBox,
    BoxInterval,
    build_hasse,
    layer_digraph,
    poset_leq,
    permuted_subposet,
    enumerate_max_chains,
    count_max_chains,
    count_paths_dfs,
    box_contains,
    product_leq,
    join,
    meet,
    strip,
    pair_order,
)
from .tiling import (
    Tile,
    TileShape,
    Tiling,
    canonical_tiles,
    verify_tiling,
    enumerate_tilings,
    count_tilings,
    enumerate_box_tilings,
    count_box_tilings,
    tiles_per_tiling,
    tile_labels,
    render_text_grid,
    render_tiling,
    tiling_to_json,
    tiling_from_json,
)

__version__ = "0.1.0"
