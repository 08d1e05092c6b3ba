"""Closed-form leading-order and Page-corrected purity/entropy predictions.

All entropies are in nats internally; base-2 display is a presentation
concern.  The half-chain Renyi correction constant is log(C_k)/(1-k): this
is the only reading consistent with the corrected half-chain purity
C_k D^-(k-1) and with the -1/2 von Neumann limit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .classalg import boundary_table
from .moments import CumulantProfile, Scalar
from .nc import catalan, enumerate_nc, log_catalan_derivative
from .perm import cayley_distance, full_cycle, identity, staggered_pairings

MAX_LEADING_K = 5  # S_12 enumeration for k=6 is out of desk-scale reach

# half-chain 1/D-correction f_k = A + B kappa4, known for k <= 4 only
_F_COEFFS = {2: (1, 2), 3: (6, 12), 4: (29, 56)}


@dataclass(frozen=True)
class PageCurvePoint:
    nA: int
    entropy: float
    order: int | str  # Renyi index or "vn"


def purity_leading_general(
    k: int, dimA: int, dimB: int, cumulants: CumulantProfile
) -> float:
    """Leading-order averaged k-purity for an arbitrary cumulant profile:

        sum over sigma in S_2k of kappa_sigma
            dimA^(#(sigma) + #(sigma^-1 tau_gamma) - 3k)
            dimB^(#(sigma) + #(sigma^-1 tau_e) - 3k).

    Exact up to multiplicative 1/D^2 Weingarten corrections.
    """
    if not 1 <= k <= MAX_LEADING_K:
        raise ValueError(f"k={k} unsupported (max {MAX_LEADING_K})")
    if cumulants.order < 2 * k:
        raise ValueError(f"cumulant profile must cover order {2 * k}")
    tau_e, tau_g = staggered_pairings(k)
    btable = boundary_table(tau_g, tau_e)
    total = 0.0
    for t_sigma, counts in btable.items():
        kappa = 1.0
        for l in t_sigma:
            kappa *= float(cumulants[l])
        if kappa == 0.0:
            continue
        nc = len(t_sigma)
        for (ca, cb), cnt in counts.items():
            total += cnt * kappa * dimA ** (nc + ca - 3 * k) * dimB ** (nc + cb - 3 * k)
    return total


def page_purity(k: int, dimA: int, dimB: int) -> float:
    """Operator Page purity: the non-crossing geodesic sum

        sum over pi in NC(k) of dimA^(-2 dist(gamma, pi)) dimB^(-2 dist(e, pi)).

    Assumes a traceless normalized operator (kappa_2 = 1).  Degenerate
    bipartitions short-circuit to the exact value 1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if dimA == 1 or dimB == 1:
        return 1.0
    gamma = full_cycle(k)
    e = identity(k)
    total = 0.0
    for pi in enumerate_nc(k):
        total += dimA ** (-2 * cayley_distance(gamma, pi)) * dimB ** (
            -2 * cayley_distance(e, pi)
        )
    return total


def half_chain_f(k: int, kappa4: Scalar):
    """f_k coefficient of the half-chain 1/D correction; known for k in {2,3,4}."""
    if k not in _F_COEFFS:
        raise ValueError(f"f_k unavailable for k={k} (known only for 2, 3, 4)")
    a, b = _F_COEFFS[k]
    return a + b * kappa4


def half_chain_purity_corrected(k: int, D: int, kappa4: Scalar) -> float:
    """C_k / D^(k-1) + f_k(kappa4) / D^k at the half-chain bipartition."""
    s = math.isqrt(D)
    if s * s != D:
        raise ValueError("half-chain bipartition needs a perfect-square D")
    return catalan(k) / D ** (k - 1) + float(half_chain_f(k, kappa4)) / D**k


def renyi_page_entropy(
    k: int, dimA: int, dimB: int, kappa4: Scalar | None = None
) -> float:
    """Annealed k-Renyi LOE entropy (1-k)^-1 log(purity), in nats.

    Uses the corrected half-chain purity when kappa4 is supplied, the
    bipartition is balanced and f_k is known; otherwise the geodesic sum.
    """
    if k == 1:
        return vn_page_entropy(dimA, dimB, kappa4)
    if dimA == 1 or dimB == 1:
        return 0.0
    if kappa4 is not None and dimA == dimB and k in _F_COEFFS:
        purity = half_chain_purity_corrected(k, dimA * dimB, kappa4)
    else:
        purity = page_purity(k, dimA, dimB)
    return math.log(purity) / (1 - k)


def vn_page_entropy(
    dimA: int, dimB: int, kappa4: Scalar | None = None
) -> float:
    """Average von Neumann LOE entropy, in nats.

    At the half chain this is log(D) - 1/2 with the -1/2 obtained as the
    k -> 1 limit of log(C_k)/(1-k) (derivative of the continued Catalan
    function); asymmetric cuts use the doubled-space Page value
    2 log(d_min) - d_min^2 / (2 d_max^2).

    The optional kappa4 term extrapolates the k <= 4 correction table
    f_k = a_k + b_k kappa4 (with f_1 = 0) by the cubic through k = 1..4;
    it is a conjecture-level 1/D refinement, not a proven coefficient.
    """
    if dimA == 1 or dimB == 1:
        return 0.0
    dmin, dmax = min(dimA, dimB), max(dimA, dimB)
    if dimA == dimB:
        D = dimA * dimB
        ent = math.log(D) - log_catalan_derivative(1.0)
        if kappa4 is not None:
            # -f'(1)/D with f the cubic through (1, 0), (2, f_2), (3, f_3), (4, f_4)
            a_prime = (18 * 1 - 9 * 6 + 2 * 29) / 6
            b_prime = (18 * 2 - 9 * 12 + 2 * 56) / 6
            ent -= (a_prime + b_prime * float(kappa4)) / D
        return ent
    return 2 * math.log(dmin) - dmin**2 / (2 * dmax**2)


def haar_ose_correction(k: int) -> float:
    """Operator-stabilizer-entropy correction constant log((2k-1)!!)/(1-k)."""
    if k <= 1:
        raise ValueError("k must be > 1")
    dfact = 1
    for j in range(3, 2 * k, 2):
        dfact *= j
    return math.log(dfact) / (1 - k)


def entropy_curve(
    order: int | str, qubits: int, kappa4: Scalar | None = None, local_dim: int = 2
) -> list[PageCurvePoint]:
    """Predicted LOE entropy for every cut nA = 0..N, matching the Monte
    Carlo scan grid."""
    pts = []
    for nA in range(qubits + 1):
        dA, dB = local_dim**nA, local_dim ** (qubits - nA)
        if order == "vn" or order == 1:
            s = vn_page_entropy(dA, dB, kappa4)
        else:
            s = renyi_page_entropy(int(order), dA, dB, kappa4)
        pts.append(PageCurvePoint(nA, s, order))
    return pts
