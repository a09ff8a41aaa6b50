"""Exact integral-lattice computations for OG10 moduli of cubic fourfolds.

The heavy lifting lives in the C++ extension ``og10lat._core``; this package
re-exports its surface.
"""

from ._core import (
    Lattice,
    MathError,
    PreconditionError,
    a2,
    acts_trivially,
    contains_unimodular_u,
    direct_sum,
    disc_group_length,
    discriminant_from_cycle,
    e8_minus,
    embedding_sufficient,
    factoriality,
    gamma_lattice,
    hassett_admissible,
    hassett_report,
    hassett_star2,
    hassett_star2prime,
    hassett_table,
    k3_moduli_birational,
    lambda_perp,
    lsv_birational,
    mukai_k3,
    mukai_kuznetsov,
    orth_complement,
    overlattice,
    picard_lpz,
    replay,
    rescale,
    same_coarse_invariants,
    saturation,
    span,
    torsor_trivializable,
    twisted_k3_stratum_birational,
    u,
)

__all__ = [
    "Lattice",
    "MathError",
    "PreconditionError",
    "a2",
    "acts_trivially",
    "contains_unimodular_u",
    "direct_sum",
    "disc_group_length",
    "discriminant_from_cycle",
    "e8_minus",
    "embedding_sufficient",
    "factoriality",
    "gamma_lattice",
    "hassett_admissible",
    "hassett_report",
    "hassett_star2",
    "hassett_star2prime",
    "hassett_table",
    "k3_moduli_birational",
    "lambda_perp",
    "lsv_birational",
    "mukai_k3",
    "mukai_kuznetsov",
    "orth_complement",
    "overlattice",
    "picard_lpz",
    "replay",
    "rescale",
    "same_coarse_invariants",
    "saturation",
    "span",
    "torsor_trivializable",
    "twisted_k3_stratum_birational",
    "u",
]
