"""Exact Hilbert series, Betti numbers, and dimension recovery for unions of
linear subspaces.

The package computes, entirely over the rationals:

- the Hilbert series of the product ideal attached to a subspace arrangement,
  in closed form from the arrangement's dimension function, together with the
  graded Betti numbers of its linear resolution and its Hilbert polynomial;
- brute-force graded dimensions of both the intersection ideal and the
  product ideal, used as an independent oracle for the closed forms;
- closed-form identities special to transversal arrangements; and
- recovery of the multiset of subspace codimensions from Hilbert-function
  values, or end to end from sample points on the union.

The ``subspace-hilbert`` console script exposes the same functionality on
arrangement and point-cloud files.
"""

from .arrangement import (
    Arrangement,
    DimensionFunction,
    dimension_function,
    is_transversal,
    random_arrangement,
    subset_cap,
)
from .gpca import (
    InconsistentDataError,
    PointCloud,
    RecoveryResult,
    binomial_basis_coefficients,
    end_to_end_recover,
    estimate_hilbert_value,
    interpolate_polynomial,
    recover_codimensions,
    sample_points,
)
from .hilbert import (
    BettiTable,
    HilbertPolynomial,
    HilbertSeriesJ,
    PSFamily,
    betti_numbers,
    compute_ps_family,
    hilbert_polynomial_from_numerator,
    hilbert_series_J,
    is_series_difference_polynomial,
    ps_family_satisfies_congruences,
    shifted_binomial_polynomial,
    transversal_hilbert_function,
    transversal_series,
)
from .linalg import (
    QMatrix,
    SubspaceBasis,
    annihilator,
    approx_rank,
    intersect,
    kernel,
    rank,
    rref,
    spans_equal,
    sum_subspaces,
)
from .oracle import (
    GradedPieceResult,
    MonomialBasis,
    MonomialCapExceeded,
    dim_intersection_ideal,
    dim_product_ideal,
    hilbert_table,
    monomial_basis,
    monomial_cap,
)
from .ratpoly import (
    QPoly,
    QSeries,
    binom,
    expand_rational,
    fit_numerator,
    one_minus_t_pow,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "BettiTable",
    "DimensionFunction",
    "GradedPieceResult",
    "HilbertPolynomial",
    "HilbertSeriesJ",
    "InconsistentDataError",
    "MonomialBasis",
    "MonomialCapExceeded",
    "PSFamily",
    "PointCloud",
    "QMatrix",
    "QPoly",
    "QSeries",
    "RecoveryResult",
    "SubspaceBasis",
    "annihilator",
    "approx_rank",
    "betti_numbers",
    "binom",
    "binomial_basis_coefficients",
    "compute_ps_family",
    "dim_intersection_ideal",
    "dim_product_ideal",
    "dimension_function",
    "end_to_end_recover",
    "estimate_hilbert_value",
    "expand_rational",
    "fit_numerator",
    "hilbert_polynomial_from_numerator",
    "hilbert_series_J",
    "hilbert_table",
    "interpolate_polynomial",
    "intersect",
    "is_series_difference_polynomial",
    "is_transversal",
    "kernel",
    "monomial_basis",
    "monomial_cap",
    "one_minus_t_pow",
    "ps_family_satisfies_congruences",
    "random_arrangement",
    "rank",
    "recover_codimensions",
    "rref",
    "sample_points",
    "shifted_binomial_polynomial",
    "spans_equal",
    "subset_cap",
    "sum_subspaces",
    "transversal_hilbert_function",
    "transversal_series",
]
