"""Exact subspace counts for linear operators over finite fields."""

from antinv._core import (
    Field,
    GuardExceeded,
    Matrix,
    Poly,
    alpha,
    alpha_diag_distinct,
    alpha_irreducible,
    alpha_nilpotent,
    block_operator,
    companion,
    companion_irreducible,
    crossing_polynomial,
    crossings,
    det_degree,
    diag_distinct,
    invariant_count,
    invariant_counts,
    involutions,
    nilpotent,
    pair_class,
    qbinom,
    qint,
    qpoch,
    random_matrix,
    sigma,
    sigma_irreducible,
    sigma_nilpotent,
    splitting_count,
    subspace_count,
    telephone_number,
    touchard,
    touchard_formula_sum,
    touchard_riordan_sum,
    universal,
    zero_sum_value,
)

__all__ = [
    "Field",
    "GuardExceeded",
    "Matrix",
    "Poly",
    "alpha",
    "alpha_diag_distinct",
    "alpha_irreducible",
    "alpha_nilpotent",
    "block_operator",
    "companion",
    "companion_irreducible",
    "crossing_polynomial",
    "crossings",
    "det_degree",
    "diag_distinct",
    "invariant_count",
    "invariant_counts",
    "involutions",
    "nilpotent",
    "pair_class",
    "qbinom",
    "qint",
    "qpoch",
    "random_matrix",
    "sigma",
    "sigma_irreducible",
    "sigma_nilpotent",
    "splitting_count",
    "subspace_count",
    "telephone_number",
    "touchard",
    "touchard_formula_sum",
    "touchard_riordan_sum",
    "universal",
    "zero_sum_value",
]
