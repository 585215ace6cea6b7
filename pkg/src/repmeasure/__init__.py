"""Repetitiveness measures of strings (BWT runs, LZ77 factors, maximal
pairs, maximal repeats, CDAWG arcs) and checks of the bounds relating them."""

__version__ = "0.1.0"

from .text import Text, lce, substring, char_at
from .bwt import bwt, cyclic_bwt, rotation_order, inverse_bwt, run_count
from .lz77 import lz77
from .periodicity import (
    exponent,
    fourth_power_runs,
    max_exponent,
    maximal_periodic_extension,
    min_period,
    q_free_witness,
)
from .repeats import (
    MaximalPair,
    cdawg_stats,
    copy_classes,
    enumerate_maximal_pairs,
    enumerate_maximal_repeats,
)
from .taxonomy import classify, count_per_index_pair, crossing_extensions, pairs_from_extension_pair
from .correspondence import check_injectivity, check_nonextendability, run_boundary_pairs
from .bounds import verify, verify_corpus
from .corpus import GeneratorSpec, generate, default_corpus
