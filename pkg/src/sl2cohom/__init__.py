"""Integral cohomology of Gamma_0(p), PGamma_0(p) and SL2(Z[1/p]), with brute-force cross-checks over SL2(F_p)."""

from .abelian import FinAbGroup, canonicalize, direct_sum, smith_normal_form
from .fp import FpMat, Prime, make_prime
from .tables import (
    CohomologyTable,
    gamma0_table,
    h1_sl2zp,
    n_of_p,
    pgamma0_table,
    q_and_a,
    sl2z_table,
    sl2zp_table,
)

__all__ = [
    "CohomologyTable",
    "FinAbGroup",
    "FpMat",
    "Prime",
    "canonicalize",
    "direct_sum",
    "gamma0_table",
    "h1_sl2zp",
    "make_prime",
    "n_of_p",
    "pgamma0_table",
    "q_and_a",
    "sl2z_table",
    "sl2zp_table",
    "smith_normal_form",
]
