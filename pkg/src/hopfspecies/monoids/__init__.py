"""Concrete species and Hopf monoids, with the surjections between them."""
from .encoding import EncodingError
from .forests import (
    FOREST,
    FORGET_PLANAR,
    PLANAR_FOREST,
    ForestHopf,
    admissible_subsets,
    forget_planar,
    is_admissible,
    restrict_forest,
)
from .free import (
    ABELIANIZATION,
    BIJ,
    BIJ_TO_PI,
    CYC,
    EPLUS,
    PI,
    SIGMA,
    FreeHopf,
    PositiveComonoid,
    cyc_delta,
    eplus_delta,
    pi_theta,
    restrict_cycle,
    sfunctor,
    tfunctor,
)
from .parking import (
    PF,
    PF_TO_PI,
    ParkingHopf,
    intersect,
    is_block_parking,
    is_parking,
    park,
    park_trace,
    pf_blocks,
    pi_pf,
)

MONOIDS = {
    "sigma": SIGMA,
    "pi": PI,
    "bij": BIJ,
    "pf": PF,
    "planar-forest": PLANAR_FOREST,
    "forest": FOREST,
}

MORPHISMS = {
    "sigma-pi": ABELIANIZATION,
    "pf-pi": PF_TO_PI,
    "forget-planar": FORGET_PLANAR,
    "bij-pi": BIJ_TO_PI,
}

__all__ = [
    "ABELIANIZATION", "BIJ", "BIJ_TO_PI", "CYC", "EPLUS", "EncodingError", "FOREST",
    "FORGET_PLANAR", "ForestHopf", "FreeHopf", "MONOIDS", "MORPHISMS", "PF", "PF_TO_PI",
    "PI", "PLANAR_FOREST", "ParkingHopf", "PositiveComonoid", "SIGMA", "admissible_subsets",
    "cyc_delta", "eplus_delta", "forget_planar", "intersect", "is_admissible",
    "is_block_parking", "is_parking", "park", "park_trace", "pf_blocks", "pi_pf", "pi_theta",
    "restrict_cycle", "restrict_forest", "sfunctor", "tfunctor",
]
