"""Exact tools for tilings by a triangle with a 2pi/3 angle."""
from .errors import *  # noqa: F401,F403
from .exact import (ALPHA, BETA, GAMMA, PI, AngleClass, AngleMeasure, AngleMode,
                    SideMode, SymLen, TileSpec, angle_add, angle_negate,
                    check_tile_spec, zh_sign)
from .model import (PlacedTile, Tiling, boundary_walk, build_tiling, place_corner,
                    place_tile, transform_tiling)
from .generators import (gen_appendix_fixture, gen_kite, gen_parallelogram,
                         gen_quadratic, worked_example_arithmetic)
from .analysis import (build_gamma_graph, census_identity_check, classify_vertices,
                       commensurability_verdict, deduce_ratios, extract_relations)
from .invariant import (match_c_internal, sawtooth_augment, zh_edge,
                        zh_kite_parallelogram_check, zh_tile, zh_tiling)
from .io import load_tiling, save_tiling
from .search import SearchConfig, enumerate_tilings, naive_enumerate

__version__ = "0.1.0"
