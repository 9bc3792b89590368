"""Admissibility of finite groups over number fields.

Fields are given by monic integer polynomials as descending coefficient
lists; groups by metacyclic parameters, permutation generators (1-based
cycles), or direct products.
"""

from ._core import (
    AdmisError,
    Field,
    Group,
    all_metacyclic_tame,
    alpha_p_min_poly,
    cyclotomic,
    decide,
    gaussian_period_min_poly,
    liedahl_condition,
    run_corpus,
    zeta_in_completion,
)

__all__ = [
    "AdmisError",
    "Field",
    "Group",
    "all_metacyclic_tame",
    "alpha_p_min_poly",
    "cyclotomic",
    "decide",
    "gaussian_period_min_poly",
    "liedahl_condition",
    "run_corpus",
    "zeta_in_completion",
]
