"""Workbench for codes in the rank metric over finite extension fields.

Exact enumerative combinatorics (sphere/ball volumes, Gaussian binomials),
the classical bound suite (Singleton-like, sphere-packing-like, the
Gilbert-Varshamov-style existence threshold, covering densities),
maximum-rank-distance code construction with its closed-form spectrum, and
random-code ensembles with exact and Monte Carlo minimum-distance
distributions.  Every closed form is backed by an exhaustive small-instance
oracle in the test suite.
"""

from .bounds import (CodeParams, DensityReport, covering_density,
                     gv_asymptotic_distance, gv_exists, gv_greedy_construct,
                     gv_on_bound, mrd_code_params, perfect_code_search,
                     quasi_perfect_table, rank1_mrd_density,
                     singleton_bound, sphere_packing_holds)
from .counting import (Space, ball_volume, gaussian_binomial, log_q,
                       sphere_volume, sphere_volumes, volume_bounds)
from .field import Basis, Field, FieldElement, default_field, is_irreducible
from .gabidulin import (GabidulinCode, LinearizedPoly, RankSpectrum,
                        mrd_spectrum, quasi_perfect_gabidulin,
                        read_codebook, write_codebook)
from .limits import GuardExceeded
from .rank import (RankVector, enumerate_span, min_rank_distance, rank,
                   rank_distance, to_matrix, transpose_code,
                   transpose_vector, vector_from_matrix)
from .random_codes import (DistributionTable, Ensemble, LemmaRanges,
                           MomentReport, distribution_upper_bound,
                           empirical_distribution, empirical_rank_census,
                           exact_distribution, lemma_ranges,
                           predicted_moments, sample_random_code,
                           total_variation)

__version__ = "0.1.0"

__all__ = [
    "Basis", "CodeParams", "DensityReport", "DistributionTable", "Ensemble",
    "Field", "FieldElement", "GabidulinCode", "GuardExceeded", "LemmaRanges",
    "LinearizedPoly", "MomentReport", "RankSpectrum", "RankVector", "Space",
    "ball_volume", "covering_density", "default_field",
    "distribution_upper_bound", "empirical_distribution",
    "empirical_rank_census", "enumerate_span", "exact_distribution",
    "gaussian_binomial", "gv_asymptotic_distance", "gv_exists",
    "gv_greedy_construct", "gv_on_bound", "is_irreducible", "lemma_ranges",
    "log_q", "min_rank_distance", "mrd_code_params", "mrd_spectrum",
    "perfect_code_search", "predicted_moments", "quasi_perfect_gabidulin",
    "quasi_perfect_table", "rank", "rank1_mrd_density", "rank_distance",
    "read_codebook", "sample_random_code", "singleton_bound",
    "sphere_packing_holds", "sphere_volume", "sphere_volumes", "to_matrix",
    "total_variation", "transpose_code", "transpose_vector",
    "vector_from_matrix", "volume_bounds", "write_codebook",
]
