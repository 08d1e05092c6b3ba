"""Non-crossing partitions and pairings, Moebius function, geodesic sets.

Non-crossing permutations of S_k are the elements on the Cayley geodesic
between the identity e and the full cycle gamma: #(pi) + #(pi^-1 gamma)
= k + 1.  Their count is the Catalan number C_k.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .perm import (
    BrauerPairing,
    Perm,
    all_pairings,
    all_perms,
    brauer_distance,
    cayley_distance,
    compose,
    from_cycles,
    full_cycle,
    identity,
    staggered_pairings,
)

MAX_NC_DEGREE = 12
MAX_GEODESIC_DEGREE = 10
MAX_PAIRING_POINTS = 16


def catalan(k: int) -> int:
    """Exact Catalan number C_k = binom(2k, k) / (k+1)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return math.comb(2 * k, k) // (k + 1)


def catalan_continued(x: float) -> float:
    """Gamma-function continuation C(x) = Gamma(2x+1) / (Gamma(x+1)^2 (x+1)).

    Defined for x > -1/2 (the first pole of Gamma(2x+1) sits at x = -1/2).
    """
    if x <= -0.5:
        raise ValueError("catalan_continued requires x > -1/2")
    return math.exp(math.lgamma(2 * x + 1) - 2 * math.lgamma(x + 1)) / (x + 1)


def log_catalan_derivative(x: float) -> float:
    """d/dx log C(x), via digamma; equals 1/2 at x = 1."""
    from scipy.special import digamma

    return float(2 * digamma(2 * x + 1) - 2 * digamma(x + 1) - 1 / (x + 1))


@dataclass(frozen=True)
class NCSet:
    k: int
    elements: tuple[Perm, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class GeodesicSet:
    anchor: Perm
    members: tuple[Perm, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _nc_partitions(points: tuple[int, ...]):
    """All non-crossing partitions of an ordered point set, recursively.

    The block of the first point is chosen as a subset whose gaps split the
    remaining points into independent intervals; classic Catalan recursion.
    """
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    m = len(rest)
    # choose positions in `rest` joining the block of `first`
    for r in range(m + 1):
        for idx in itertools.combinations(range(m), r):
            block = [first] + [rest[i] for i in idx]
            # the chosen positions cut `rest` into segments that must be
            # partitioned independently (non-crossing constraint)
            segments = []
            prev = -1
            for i in list(idx) + [m]:
                segments.append(rest[prev + 1:i])
                prev = i
            for combo in _product_partitions(segments):
                yield [block] + combo


def _product_partitions(segments):
    if not segments:
        yield []
        return
    head, tail = segments[0], segments[1:]
    for p in _nc_partitions(tuple(head)):
        for q in _product_partitions(tail):
            yield p + q


def _partition_to_perm(blocks, k: int) -> Perm:
    """Each block, sorted ascending, becomes an increasing cycle."""
    return from_cycles([tuple(sorted(b)) for b in blocks], k)


def is_noncrossing(p: Perm) -> bool:
    """Geodesic criterion: #(pi) + #(pi^-1 gamma) = k + 1."""
    k = p.n
    gamma = full_cycle(k)
    return p.cycle_count() + compose(p.inverse(), gamma).cycle_count() == k + 1


def enumerate_nc(k: int) -> NCSet:
    """All non-crossing permutations of S_k; cardinality catalan(k).

    Filters S_k by the distance criterion for small k (doubling as the test
    oracle) and builds from non-crossing partitions above that.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > MAX_NC_DEGREE:
        raise ValueError(f"degree {k} too large (max {MAX_NC_DEGREE})")
    if k <= 6:
        elems = tuple(p for p in all_perms(k) if is_noncrossing(p))
    else:
        elems = tuple(
            _partition_to_perm(blocks, k)
            for blocks in _nc_partitions(tuple(range(k)))
        )
    return NCSet(k, elems)


def enumerate_nc_pairings(two_k: int) -> list[BrauerPairing]:
    """All non-crossing pairings on 2k points: the pairings sigma on the
    Cayley geodesic between tau_gamma and tau_e; cardinality catalan(k)."""
    if two_k % 2:
        raise ValueError("need an even number of points")
    if two_k > MAX_PAIRING_POINTS:
        raise ValueError(f"{two_k} points too large (max {MAX_PAIRING_POINTS})")
    k = two_k // 2
    tau_e, tau_g = staggered_pairings(k)
    te = BrauerPairing.from_perm(tau_e)
    tg = BrauerPairing.from_perm(tau_g)
    d_full = brauer_distance(te, tg)
    return [
        s
        for s in all_pairings(two_k)
        if brauer_distance(tg, s) + brauer_distance(s, te) == d_full
    ]


def mobius(a: Perm, b: Perm) -> int:
    """Moebius function: product over cycles of a^-1 b of (-1)^(l-1) C_{l-1}.

    Symmetric in its arguments (a^-1 b and b^-1 a share a cycle type).
    """
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} != {b.n}")
    out = 1
    for c in compose(a.inverse(), b).cycles():
        l = len(c)
        out *= (-1) ** (l - 1) * catalan(l - 1)
    return out


def geodesic_set(sigma: Perm) -> GeodesicSet:
    """All pi with dist(sigma, pi) + dist(pi, e) = dist(sigma, e).

    Built constructively: the interval [e, sigma] factorizes over the cycles
    of sigma, with the restriction to each cycle ranging over the
    non-crossing permutations of that cycle (in traversal order).
    """
    n = sigma.n
    if n > MAX_GEODESIC_DEGREE:
        raise ValueError(f"degree {n} too large (max {MAX_GEODESIC_DEGREE})")
    per_cycle = []
    for cyc in sigma.cycles():
        l = len(cyc)
        opts = []
        for nc in enumerate_nc(l) if l > 1 else [identity(1)]:
            # relabel the NC permutation of S_l onto the cycle's points,
            # in the cycle's own traversal order
            opts.append([(cyc[i], cyc[nc(i)]) for i in range(l)])
        per_cycle.append(opts)
    members = []
    for combo in itertools.product(*per_cycle):
        word = [0] * n
        for part in combo:
            for src, dst in part:
                word[src] = dst
        members.append(Perm(word))
    members.sort(key=lambda p: (cayley_distance(p, identity(n)), p.word))
    return GeodesicSet(sigma, tuple(members))


def geodesic_set_bruteforce(sigma: Perm) -> set[Perm]:
    """Exhaustive filter over S_n; test oracle for geodesic_set."""
    n = sigma.n
    e = identity(n)
    d = cayley_distance(sigma, e)
    return {
        p
        for p in all_perms(n)
        if cayley_distance(sigma, p) + cayley_distance(p, e) == d
    }
