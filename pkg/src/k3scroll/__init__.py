"""Exact intersection numbers for scrolls over K3 surfaces built from
Lazarsfeld-Mukai bundles, with an audit of printed closed forms."""

from .brill_noether import (
    Admissibility,
    BNTriple,
    InadmissibleError,
    admissible,
    enumerate_admissible,
    gonality,
    lm_bundle,
    lm_twist,
    rho,
)
from .exact_chow import ChowS, K3Context, SelfCheckError, chow_mul, integrate_s
from .proj_bundle import BundleChern, ChowP, groth_reduce, pushforward, top_self_intersection
from .sheaf_calc import (
    MukaiVector,
    SheafData,
    dim_moduli,
    expected_dim_raw,
    mukai_vector,
    riemann_roch_k3,
    twist_by_L,
)

__all__ = [
    "Admissibility",
    "BNTriple",
    "BundleChern",
    "ChowP",
    "ChowS",
    "InadmissibleError",
    "K3Context",
    "MukaiVector",
    "SelfCheckError",
    "SheafData",
    "admissible",
    "chow_mul",
    "dim_moduli",
    "enumerate_admissible",
    "expected_dim_raw",
    "gonality",
    "groth_reduce",
    "integrate_s",
    "lm_bundle",
    "lm_twist",
    "mukai_vector",
    "pushforward",
    "rho",
    "riemann_roch_k3",
    "top_self_intersection",
    "twist_by_L",
]
