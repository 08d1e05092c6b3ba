"""Normalized operator moments, free cumulants, and the Haar OTOC value.

A MomentProfile holds m[l] = <O^l> = tr[O^l]/D for l = 1..L.  Moments of a
single operator factorize over the cycles of a permutation, so the replica
engines never need the matrix itself; matrices are reduced to profiles at
this module's boundary.

Profiles may carry exact rationals (for the exact engine) or floats (for
Monte Carlo comparison); mixing the two in one profile is rejected.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .nc import catalan, enumerate_nc, mobius
from .perm import CycleType, Perm, compose, full_cycle

Scalar = Fraction | float

MAX_CUMULANT_ORDER = 10


def _check_values(values: Sequence[Scalar]) -> tuple[Scalar, ...]:
    vals = tuple(values)
    if not vals:
        raise ValueError("profile needs at least order 1")
    exact = [isinstance(v, Rational) for v in vals]
    if any(exact) and not all(exact):
        raise TypeError("profile mixes exact rationals and floats")
    if all(exact):
        vals = tuple(Fraction(v) for v in vals)
    return vals


@dataclass(frozen=True)
class MomentProfile:
    """m[l] = <O^l> for l = 1..len(values)."""

    values: tuple[Scalar, ...]

    def __init__(self, values: Sequence[Scalar]):
        object.__setattr__(self, "values", _check_values(values))

    @property
    def order(self) -> int:
        return len(self.values)

    def __getitem__(self, l: int) -> Scalar:
        if not 1 <= l <= self.order:
            raise IndexError(f"moment order {l} outside 1..{self.order}")
        return self.values[l - 1]

    @property
    def is_exact(self) -> bool:
        return isinstance(self.values[0], Fraction)

    def is_normalized(self) -> bool:
        return self.order >= 2 and self.values[1] == 1


@dataclass(frozen=True)
class CumulantProfile:
    """kappa[n] for n = 1..len(values)."""

    values: tuple[Scalar, ...]

    def __init__(self, values: Sequence[Scalar]):
        object.__setattr__(self, "values", _check_values(values))

    @property
    def order(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Scalar:
        if not 1 <= n <= self.order:
            raise IndexError(f"cumulant order {n} outside 1..{self.order}")
        return self.values[n - 1]


def moment_of_permutation(profile: MomentProfile, pi: Perm) -> Scalar:
    """<O>_pi = prod over cycles a of pi of m[|a|]."""
    return moment_of_cycle_type(profile, pi.cycle_type())


def moment_of_cycle_type(profile: MomentProfile, ct: CycleType) -> Scalar:
    out: Scalar = Fraction(1) if profile.is_exact else 1.0
    for l in ct:
        if l > profile.order:
            raise ValueError(f"profile too short: needs order {l}, has {profile.order}")
        out = out * profile[l]
    return out


def cumulant_of_permutation(cumulants: CumulantProfile, pi: Perm) -> Scalar:
    """kappa_pi = prod over cycles a of pi of kappa[|a|]."""
    out: Scalar = Fraction(1) if isinstance(cumulants.values[0], Fraction) else 1.0
    for c in pi.cycles():
        if len(c) > cumulants.order:
            raise ValueError(
                f"profile too short: needs order {len(c)}, has {cumulants.order}"
            )
        out = out * cumulants[len(c)]
    return out


def cumulants_from_moments(profile: MomentProfile) -> CumulantProfile:
    """Free cumulants via Moebius inversion over the non-crossing lattice:

        kappa_n = sum over sigma in NC(n) of <O>_sigma mu(sigma, gamma).

    The argument order is pinned by the round-trip identity
    m_n = sum over pi in NC(n) of kappa_pi (mu is symmetric here anyway,
    since sigma^-1 gamma and gamma^-1 sigma share a cycle type).
    """
    L = profile.order
    if L > MAX_CUMULANT_ORDER:
        raise ValueError(f"order {L} too large (max {MAX_CUMULANT_ORDER})")
    kappas = []
    for n in range(1, L + 1):
        gamma = full_cycle(n)
        acc: Scalar = Fraction(0) if profile.is_exact else 0.0
        for sigma in enumerate_nc(n):
            acc = acc + moment_of_permutation(profile, sigma) * mobius(sigma, gamma)
        kappas.append(acc)
    return CumulantProfile(kappas)


def moments_from_cumulants(cumulants: CumulantProfile) -> MomentProfile:
    """Round trip: m_n = sum over pi in NC(n) of kappa_pi."""
    ms = []
    for n in range(1, cumulants.order + 1):
        acc: Scalar = Fraction(0) if isinstance(cumulants.values[0], Fraction) else 0.0
        for pi in enumerate_nc(n):
            acc = acc + cumulant_of_permutation(cumulants, pi)
        ms.append(acc)
    return MomentProfile(ms)


def haar_otoc(op_cumulants: CumulantProfile, x_moments: MomentProfile, k: int) -> Scalar:
    """Haar value of the k-point OTOC D^-1 tr[(O_U X)^k]:

        sum over sigma in NC(k) of kappa_sigma(O) <X>_{sigma^-1 gamma}.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    gamma = full_cycle(k)
    acc: Scalar = Fraction(0) if x_moments.is_exact else 0.0
    for sigma in enumerate_nc(k):
        kap = cumulant_of_permutation(op_cumulants, sigma)
        xm = moment_of_permutation(x_moments, compose(sigma.inverse(), gamma))
        acc = acc + kap * xm
    return acc


# ---------------------------------------------------------------------------
# Stock profiles


def pauli_profile(order: int) -> MomentProfile:
    """Moments of a non-identity Pauli string: 0 at odd, 1 at even orders."""
    return MomentProfile([Fraction(1 - l % 2) for l in range(1, order + 1)])


def semicircle_profile(order: int) -> MomentProfile:
    """Free semicircular moments (kappa_2 = 1, all else 0): Catalans at even orders."""
    return MomentProfile(
        [Fraction(catalan(l // 2)) if l % 2 == 0 else Fraction(0) for l in range(1, order + 1)]
    )


def identity_profile(order: int) -> MomentProfile:
    """<X^j> = 1 for all j (X = identity)."""
    return MomentProfile([Fraction(1)] * order)


def traceless_profile(order: int, kappa4: Scalar) -> MomentProfile:
    """Traceless normalized profile with prescribed fourth free cumulant:
    kappa_2 = 1, kappa_4 = kappa4, every other cumulant zero."""
    kaps = [Fraction(0)] * order
    if order >= 2:
        kaps[1] = Fraction(1)
    if order >= 4:
        kaps[3] = Fraction(kappa4)
    return moments_from_cumulants(CumulantProfile(kaps))


def finite_trace_profile(order: int, w: Scalar) -> MomentProfile:
    """Moments of O = w 1 + sqrt(1 - w^2) P for a non-identity Pauli string P.

    <O> = w and <O^2> = 1.  Exact when w^2 is rational: odd powers of the
    Pauli part have vanishing trace, so m_l = sum over even j of
    binom(l, j) w^(l-j) (1-w^2)^(j/2).
    """
    w2 = w * w
    ms = []
    import math

    for l in range(1, order + 1):
        acc = w2 * 0  # zero of the right exactness
        for j in range(0, l + 1, 2):
            acc = acc + math.comb(l, j) * w ** (l - j) * (1 - w2) ** (j // 2)
        ms.append(acc)
    return MomentProfile(ms)
