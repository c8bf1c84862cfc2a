"""frobtile: Frobenius numbers and constructive brick tilings of boxes."""

from .codec import codec_roundtrip, decode, encode, load_tiling, save_tiling
from .constructor import (
    AdmissibilityReport,
    BrickSystem,
    check_admissible,
    construct_box,
    gn_bound,
    xk_generators,
)
from .model import (
    ROTATION_AXIS_PERMUTATIONS,
    ROTATION_FIXED,
    BoxShape,
    Brick,
    Placement,
    Tiling,
    VerifyReport,
    extrude,
    grid_fill,
    remap_bricks,
    stack,
    verify_full,
    verify_sampled,
)
from .oracle import (
    SearchConfig,
    SearchResult,
    builtin_fixture,
    exact_cover_search,
    regenerate_fixtures,
    threshold_scan,
)
from .planar import (
    Decision,
    compose_squares,
    corollary1_construct,
    corollary1_threshold,
    decide_single_brick,
    decide_two_squares,
    prime_cubes_bound,
    prime_cubes_construct,
    tile_square_235p,
)
from .render import RenderOptions, render_ascii, render_svg
from .semigroup import (
    GeneratorSet,
    Representation,
    closed_form_primes,
    frobenius_general,
    frobenius_pair,
    pair_representation,
    quotient_set,
    reduce_brauer_shockley,
    represent,
)

__all__ = [
    "AdmissibilityReport",
    "BoxShape",
    "Brick",
    "BrickSystem",
    "Decision",
    "GeneratorSet",
    "Placement",
    "ROTATION_AXIS_PERMUTATIONS",
    "ROTATION_FIXED",
    "RenderOptions",
    "Representation",
    "SearchConfig",
    "SearchResult",
    "Tiling",
    "VerifyReport",
    "builtin_fixture",
    "check_admissible",
    "closed_form_primes",
    "codec_roundtrip",
    "compose_squares",
    "construct_box",
    "corollary1_construct",
    "corollary1_threshold",
    "decide_single_brick",
    "decide_two_squares",
    "decode",
    "encode",
    "exact_cover_search",
    "extrude",
    "frobenius_general",
    "frobenius_pair",
    "gn_bound",
    "grid_fill",
    "load_tiling",
    "pair_representation",
    "prime_cubes_bound",
    "prime_cubes_construct",
    "quotient_set",
    "reduce_brauer_shockley",
    "regenerate_fixtures",
    "remap_bricks",
    "render_ascii",
    "render_svg",
    "represent",
    "save_tiling",
    "stack",
    "threshold_scan",
    "tile_square_235p",
    "verify_full",
    "verify_sampled",
    "xk_generators",
]

__version__ = "0.1.0"
