"""Exact-arithmetic toolkit for k-broad restriction exponents.

Thin Python veneer over the C++ core: every exact quantity crosses the
boundary as a fraction string (parse with :class:`fractions.Fraction`),
floats are provided only for convenience, and the incidence-lab entry
points are seed-deterministic.
"""

from ._core import (
    appendix_product_bounds,
    asymptotic_fit,
    beta_ratios,
    cardano_root,
    chain_inequality_check,
    direction_lattice,
    dyadic_product,
    extremal_summary,
    falsification_trial,
    gamma_weights,
    lebesgue_exponents,
    line_occupancy,
    line_occupancy_mc,
    linear_exponent,
    nu_lambda,
    p_broad,
    p_limit,
    p_upper_bg,
    solve_cubic,
    state_of_art_table,
    theorem_bound,
    tomas_gap,
    verify_identities,
    verify_identities_symbolic,
)

__all__ = [
    "appendix_product_bounds",
    "asymptotic_fit",
    "beta_ratios",
    "cardano_root",
    "chain_inequality_check",
    "direction_lattice",
    "dyadic_product",
    "extremal_summary",
    "falsification_trial",
    "gamma_weights",
    "lebesgue_exponents",
    "line_occupancy",
    "line_occupancy_mc",
    "linear_exponent",
    "nu_lambda",
    "p_broad",
    "p_limit",
    "p_upper_bg",
    "solve_cubic",
    "state_of_art_table",
    "theorem_bound",
    "tomas_gap",
    "verify_identities",
    "verify_identities_symbolic",
]

__version__ = "0.1.0"
