"""Designs in distance degree regular metric spaces.

Construct Hamming, Johnson, and permutation spaces; compute exact pair-distance
frequencies and moments; certify design strength algebraically (moments, dual
frequencies) and combinatorially (orthogonal arrays, block designs, group
transitivity); and verify Christoffel-function and Markov-Stieltjes bounds on
cumulative distance distributions, with desk-scale limit checks.
"""

from .spaces import Space, make_space, distance, verify_ddr, derangement_numbers
from .empirics import (
    PointSet,
    FrequencyVector,
    point_set,
    full_space,
    frequencies,
    space_frequencies,
    moment,
    cdf,
    cdf_table,
)
from .orthopoly import (
    DiscreteMeasure,
    MonicOrthogonalSystem,
    KernelValue,
    build_measure,
    gram_schmidt,
    krawtchouk,
    hahn,
    charlier,
    johnson_rank,
    kernel,
    zeros,
    gauss_weights,
)
from .designs import (
    DualFrequencies,
    DesignReport,
    dual_frequencies,
    strength_by_moments,
    strength_by_dual,
    oa_strength,
    block_design_strength,
    transitivity_degree,
    fixed_point_moments,
    bell_numbers,
    design_report,
)
from .bounds import (
    BoundReport,
    christoffel_bound_check,
    markov_stieltjes_envelope,
    corollary_bound,
    fixed_point_cdf_bound,
    fixed_point_cdf_table,
)
from .asymptotics import (
    normal_cdf,
    binomial_cdf,
    berry_esseen_gap,
    hahn_limit_check,
    limit_kernel,
    johnson_space_cdf,
)

__version__ = "0.1.0"
