"""Exact Haar-averaged operator and state k-purities, in rational arithmetic.

The operator k-purity average is the double sum over S_2k

    P = sum_{pi, sigma} Wg(type(pi sigma^-1)) <O>_pi D^(#(pi)-k)
                        D_A^#(sigma^-1 tau_gamma) D_Abar^#(sigma^-1 tau_e).

Both <O>_pi D^#(pi) and Wg are class functions, so the inner pi-sum is a
class function of sigma and is evaluated once per cycle type of sigma
(O(|S_2k| p(2k)) table build instead of O(|S_2k|^2), amortized across all
dimensions and profiles).  The outer sigma-sum reduces to a cached
histogram of the boundary cycle counts.  A naive double-sum reference is
retained for k <= 3 as a test oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .classalg import boundary_table, count_table
from .moments import MomentProfile, moment_of_cycle_type
from .perm import (
    CycleType,
    Perm,
    all_perms,
    compose,
    full_cycle,
    identity,
    second_moment_pairing,
    staggered_pairings,
)
from .weingarten import weingarten_exact

MAX_EXACT_K = 4


@dataclass(frozen=True)
class PurityQuery:
    k: int
    dimA: int
    dimB: int
    profile: MomentProfile

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.dimA < 1 or self.dimB < 1:
            raise ValueError("subsystem dimensions must be positive")
        if not self.profile.is_exact:
            raise TypeError("the exact engine needs an exact (rational) profile")

    @property
    def dim(self) -> int:
        return self.dimA * self.dimB


@dataclass(frozen=True)
class ExactPurityResult:
    value: Fraction
    breakdown: dict[CycleType, Fraction] | None = None

    def __float__(self) -> float:
        return float(self.value)


def _replica_sum(
    n: int,
    dim: int,
    dimA: int,
    dimB: int,
    weight: Callable[[CycleType], Fraction],
    bnd_a: Perm,
    bnd_b: Perm,
    want_breakdown: bool = False,
) -> ExactPurityResult:
    """sum_{pi, sigma in S_n} Wg(type(pi sigma^-1)) weight(type pi)
    dimA^#(sigma^-1 bnd_a) dimB^#(sigma^-1 bnd_b)."""
    wg = weingarten_exact(n, dim)
    ctable = count_table(n)
    btable = boundary_table(bnd_a, bnd_b)
    weights = {}
    total = Fraction(0)
    breakdown: dict[CycleType, Fraction] = {}
    for t_sigma, boundary_counts in btable.items():
        h = Fraction(0)
        for (t_pi, t_prod), cnt in ctable[t_sigma].items():
            if t_pi not in weights:
                weights[t_pi] = weight(t_pi)
            w = weights[t_pi]
            if w:
                h += cnt * w * wg(t_prod)
        # h is constant on the class; boundary_counts histograms the class
        outer = Fraction(0)
        for (ca, cb), cnt in boundary_counts.items():
            outer += cnt * Fraction(dimA) ** ca * Fraction(dimB) ** cb
        contrib = h * outer
        total += contrib
        if want_breakdown:
            breakdown[t_sigma] = contrib
    return ExactPurityResult(total, breakdown if want_breakdown else None)


def average_purity_exact(q: PurityQuery, breakdown: bool = False) -> ExactPurityResult:
    """Exact Haar-averaged operator k-purity; k <= 4, D >= 2k."""
    if q.k > MAX_EXACT_K:
        raise ValueError(f"k={q.k} unsupported (max {MAX_EXACT_K})")
    if q.dim < 2 * q.k:
        raise ValueError(f"need D >= 2k, got D={q.dim}, k={q.k}")
    n = 2 * q.k
    tau_e, tau_g = staggered_pairings(q.k)
    D = Fraction(q.dim)

    def weight(t_pi: CycleType) -> Fraction:
        return moment_of_cycle_type(q.profile, t_pi) * D ** (len(t_pi) - q.k)

    return _replica_sum(n, q.dim, q.dimA, q.dimB, weight, tau_g, tau_e, breakdown)


def average_purity_exact_naive(q: PurityQuery) -> Fraction:
    """O(|S_2k|^2) reference implementation; test oracle for k <= 3."""
    if q.k > 3:
        raise ValueError("naive reference limited to k <= 3")
    n = 2 * q.k
    tau_e, tau_g = staggered_pairings(q.k)
    wg = weingarten_exact(n, q.dim)
    D = Fraction(q.dim)
    elems = list(all_perms(n))
    total = Fraction(0)
    for pi in elems:
        m = moment_of_cycle_type(q.profile, pi.cycle_type())
        if not m:
            continue
        g = m * D ** (pi.cycle_count() - q.k)
        for sigma in elems:
            si = sigma.inverse()
            total += (
                wg.of_pair(pi, sigma)
                * g
                * Fraction(q.dimA) ** compose(si, tau_g).cycle_count()
                * Fraction(q.dimB) ** compose(si, tau_e).cycle_count()
            )
    return total


def average_purity_second_moment_exact(
    q: PurityQuery, breakdown: bool = False
) -> ExactPurityResult:
    """Exact Haar average of (P^(2)_A)^2, the degree-8 replica sum; k = 2 only."""
    if q.k != 2:
        raise ValueError("second moment implemented for k = 2 only")
    if q.dim < 8:
        raise ValueError(f"need D >= 4k = 8, got D={q.dim}")
    n = 8
    tau_g2 = second_moment_pairing(2)
    tau_e8, _ = staggered_pairings(4)
    D = Fraction(q.dim)

    def weight(t_pi: CycleType) -> Fraction:
        return moment_of_cycle_type(q.profile, t_pi) * D ** (len(t_pi) - 2 * q.k)

    return _replica_sum(n, q.dim, q.dimA, q.dimB, weight, tau_g2, tau_e8, breakdown)


def relative_variance_exact(q: PurityQuery) -> Fraction:
    """delta^2 = <P^2> / <P>^2 - 1 for the k = 2 operator purity."""
    first = average_purity_exact(q).value
    second = average_purity_second_moment_exact(q).value
    return second / first**2 - 1


def average_state_purity_exact(
    k: int, dimA: int, dimB: int, doubled: bool = True
) -> ExactPurityResult:
    """Exact Haar-average state k-purity (single-replica-set Weingarten sum).

    With ``doubled`` the Haar state lives in dimension (dimA*dimB)^2 with
    the cut at dimA^2 (the operator-comparison setting); otherwise in
    dimension dimA*dimB with the cut at dimA.
    """
    if not 1 <= k <= MAX_EXACT_K:
        raise ValueError(f"k={k} unsupported (max {MAX_EXACT_K})")
    if doubled:
        dA, dB = dimA * dimA, dimB * dimB
    else:
        dA, dB = dimA, dimB
    dim = dA * dB
    if dim < k:
        raise ValueError(f"need total dimension >= k, got {dim}")
    gamma = full_cycle(k)
    e = identity(k)

    def weight(t_pi: CycleType) -> Fraction:
        return Fraction(1)  # tr[T_pi psi^(x k)] = 1 for a pure state

    return _replica_sum(k, dim, dA, dB, weight, gamma, e)


def average_state_purity_exact_naive(k: int, dimA: int, dimB: int, doubled: bool = True) -> Fraction:
    """Double-sum reference for the state engine, k <= 3."""
    if k > 3:
        raise ValueError("naive reference limited to k <= 3")
    dA, dB = (dimA * dimA, dimB * dimB) if doubled else (dimA, dimB)
    dim = dA * dB
    wg = weingarten_exact(k, dim)
    gamma = full_cycle(k)
    total = Fraction(0)
    for pi in all_perms(k):
        for sigma in all_perms(k):
            si = sigma.inverse()
            total += (
                wg.of_pair(pi, sigma)
                * Fraction(dA) ** compose(si, gamma).cycle_count()
                * Fraction(dB) ** si.cycle_count()
            )
    return total
