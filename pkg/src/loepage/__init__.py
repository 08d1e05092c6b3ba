"""Haar-averaged local-operator entanglement (LOE) entropies, three ways.

Three independent engines compute the same quantities and cross-validate:

- :mod:`loepage.exact` -- exact rational Weingarten summation over replica
  permutations (k-purities and their fluctuations at finite dimension);
- :mod:`loepage.asymptotics` -- free-probability large-D predictions (the
  operator Page curve, half-chain corrections, annealed entropies);
- :mod:`loepage.montecarlo` -- direct simulation with Haar-random unitaries.

Supporting layers: :mod:`loepage.perm` (symmetric-group machinery),
:mod:`loepage.nc` (non-crossing partitions and the NC Moebius function),
:mod:`loepage.weingarten` (exact Weingarten tables), :mod:`loepage.moments`
(moment/cumulant profiles), :mod:`loepage.series` (exact 1/D-series
recovery), :mod:`loepage.cli` (the `loepage` command).
"""

from .asymptotics import (
    entropy_curve,
    haar_ose_correction,
    page_purity,
    purity_leading_general,
    renyi_page_entropy,
    vn_page_entropy,
)
from .exact import (
    PurityQuery,
    average_purity_exact,
    average_purity_second_moment_exact,
    average_state_purity_exact,
    relative_variance_exact,
)
from .moments import (
    CumulantProfile,
    MomentProfile,
    cumulants_from_moments,
    haar_otoc,
    moments_from_cumulants,
    pauli_profile,
    semicircle_profile,
    traceless_profile,
)
from .montecarlo import (
    EntropyCurve,
    OperatorSpec,
    entropies_from_spectrum,
    fluctuation_scan,
    haar_sample,
    loe_spectrum,
    page_curve_scan,
    state_page_scan,
)
from .nc import catalan, enumerate_nc, enumerate_nc_pairings, geodesic_set, mobius
from .perm import Perm, from_cycles, parse_cycles, staggered_pairings
from .weingarten import weingarten_asymptotic, weingarten_exact

__version__ = "0.1.0"

__all__ = [
    "CumulantProfile",
    "EntropyCurve",
    "MomentProfile",
    "OperatorSpec",
    "Perm",
    "PurityQuery",
    "average_purity_exact",
    "average_purity_second_moment_exact",
    "average_state_purity_exact",
    "catalan",
    "cumulants_from_moments",
    "entropies_from_spectrum",
    "entropy_curve",
    "enumerate_nc",
    "enumerate_nc_pairings",
    "fluctuation_scan",
    "from_cycles",
    "geodesic_set",
    "haar_otoc",
    "haar_ose_correction",
    "haar_sample",
    "loe_spectrum",
    "mobius",
    "moments_from_cumulants",
    "page_curve_scan",
    "page_purity",
    "parse_cycles",
    "pauli_profile",
    "purity_leading_general",
    "relative_variance_exact",
    "renyi_page_entropy",
    "semicircle_profile",
    "staggered_pairings",
    "state_page_scan",
    "traceless_profile",
    "vn_page_entropy",
    "weingarten_asymptotic",
    "weingarten_exact",
]
