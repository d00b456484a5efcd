"""Exact computations on pointed partition posets and their complexes."""

from ._ptopo import (
    beta,
    complement,
    compositions,
    critical_cells,
    cycle,
    delta_faces,
    delta_homology,
    descent_class,
    descent_composition,
    is_knapsack,
    kappa,
    lambda_faces,
    lambda_homology,
    mobius_filter,
    mobius_pi_c,
    run_suite,
    v_set,
)

__all__ = [
    "beta",
    "complement",
    "compositions",
    "critical_cells",
    "cycle",
    "delta_faces",
    "delta_homology",
    "descent_class",
    "descent_composition",
    "is_knapsack",
    "kappa",
    "lambda_faces",
    "lambda_homology",
    "mobius_filter",
    "mobius_pi_c",
    "run_suite",
    "v_set",
]
