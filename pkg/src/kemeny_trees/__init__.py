"""Exact Kemeny's constant for trees.

Several independent routes to the same rational value, constructors for the
caterpillar and broom-star families, order/diameter bounds, and exhaustive
desk-scale checks of the extremal results.
"""
__version__ = "0.1.0"

from .errors import KemenyError
from .graph import (
    Graph,
    RootedTree,
    bipartition,
    build_graph,
    canonical_code,
    diameter,
    distance_matrix,
    moment,
)
from .kemeny import (
    ConcatenationProfile,
    MfpResult,
    SpectralResult,
    kappa,
    kappa_broomstar,
    kappa_caterpillar,
    kappa_combinatorial,
    kappa_concatenation,
    kappa_pendent_removal,
    kappa_spectral,
    mfp_analysis,
)
from .kernels import BACKEND
