"""Permutation-group arithmetic and Cayley geometry on S_n.

Permutations are stored in 0-indexed one-line (word) form: the word
``(w[0], ..., w[n-1])`` represents the map ``x -> w[x]``.  Cycle notation
(1-indexed, as in ``"(1 2)(3 4)"``) is used only for parsing and printing.

The module also provides the staggered boundary pairings that encode the
operator k-purity contraction, and perfect matchings on 2k points with
Brauer-algebra loop counting.
"""
from __future__ import annotations

import itertools
import re
from typing import Iterable, Sequence

CycleType = tuple[int, ...]


class Perm:
    """An element of S_n in one-line form, with cached cycle decomposition.

    Immutable and hashable; cycle data is computed lazily since cycle
    counting is the hot operation in the exact summation engine.
    """

    __slots__ = ("word", "_cycles")

    def __init__(self, word: Iterable[int]):
        w = tuple(word)
        n = len(w)
        if n == 0:
            raise ValueError("empty permutation")
        seen = [False] * n
        for x in w:
            if not 0 <= x < n or seen[x]:
                raise ValueError(f"not a permutation word: {w}")
            seen[x] = True
        self.word = w
        self._cycles: tuple[tuple[int, ...], ...] | None = None

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, x: int) -> int:
        return self.word[x]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.word == other.word

    def __hash__(self) -> int:
        return hash(self.word)

    def __repr__(self) -> str:
        return f"Perm({list(self.word)})"

    def __str__(self) -> str:
        return to_cycle_string(self)

    def inverse(self) -> "Perm":
        inv = [0] * self.n
        for i, x in enumerate(self.word):
            inv[x] = i
        return Perm(inv)

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each starting at its smallest point."""
        if self._cycles is None:
            w = self.word
            seen = [False] * len(w)
            out = []
            for i in range(len(w)):
                if seen[i]:
                    continue
                c = [i]
                seen[i] = True
                j = w[i]
                while j != i:
                    c.append(j)
                    seen[j] = True
                    j = w[j]
                out.append(tuple(c))
            self._cycles = tuple(out)
        return self._cycles

    def cycle_count(self) -> int:
        return len(self.cycles())

    def cycle_type(self) -> CycleType:
        """Cycle lengths sorted descending; the conjugacy-class key."""
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.word))


def identity(n: int) -> Perm:
    return Perm(range(n))


def full_cycle(n: int) -> Perm:
    """The cyclic permutation gamma = (1 2 ... n), i.e. x -> x+1 mod n."""
    return Perm([(i + 1) % n for i in range(n)])


def compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(x) = a(b(x))."""
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} != {b.n}")
    bw = b.word
    aw = a.word
    return Perm([aw[bw[i]] for i in range(a.n)])


def cayley_distance(a: Perm, b: Perm) -> int:
    """Minimal number of transpositions from b to a: n - #(a b^-1)."""
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} != {b.n}")
    return a.n - compose(a, b.inverse()).cycle_count()


def word_cycle_type(word: Sequence[int]) -> CycleType:
    """Cycle type of a raw word without constructing a Perm (hot path)."""
    n = len(word)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i]:
            continue
        ln = 1
        seen[i] = True
        j = word[i]
        while j != i:
            ln += 1
            seen[j] = True
            j = word[j]
        parts.append(ln)
    parts.sort(reverse=True)
    return tuple(parts)


def from_cycles(cycles: Iterable[Iterable[int]], n: int) -> Perm:
    """Build a permutation from 0-indexed cycles; unlisted points are fixed."""
    word = list(range(n))
    for cyc in cycles:
        c = list(cyc)
        for i, x in enumerate(c):
            word[x] = c[(i + 1) % len(c)]
    return Perm(word)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(s: str, n: int | None = None) -> Perm:
    """Parse 1-indexed cycle notation, e.g. "(1 2)(3 4)" or "(12)(34)".

    Points may be separated by spaces or commas; in the compact digit form
    each character is one point (only valid for degrees <= 9).  ``n``
    defaults to the largest point mentioned.
    """
    s = s.strip()
    if not s or s in ("e", "id"):
        if n is None:
            raise ValueError("identity needs an explicit degree")
        return identity(n)
    groups = _CYCLE_RE.findall(s)
    if not groups or "".join(f"({g})" for g in groups) != re.sub(r"\s+\(", "(", s):
        raise ValueError(f"malformed cycle string: {s!r}")
    cycles = []
    for g in groups:
        g = g.strip()
        if "," in g or " " in g:
            pts = [int(t) for t in re.split(r"[,\s]+", g) if t]
        else:
            pts = [int(ch) for ch in g]
        if len(set(pts)) != len(pts) or any(p < 1 for p in pts):
            raise ValueError(f"invalid cycle {g!r}")
        cycles.append([p - 1 for p in pts])
    flat = [p for c in cycles for p in c]
    if len(set(flat)) != len(flat):
        raise ValueError(f"point repeated across cycles: {s!r}")
    maxpt = max(flat) + 1
    if n is None:
        n = maxpt
    elif maxpt > n:
        raise ValueError(f"point {maxpt} exceeds degree {n}")
    return from_cycles(cycles, n)


def to_cycle_string(p: Perm, with_fixed: bool = True) -> str:
    """1-indexed cycle notation, fixed points shown as singletons."""
    parts = []
    for c in p.cycles():
        if len(c) == 1 and not with_fixed:
            continue
        parts.append("(" + " ".join(str(x + 1) for x in c) + ")")
    return "".join(parts) if parts else "e"


def staggered_pairings(k: int) -> tuple[Perm, Perm]:
    """The boundary pairings tau_e, tau_gamma in S_{2k}.

    tau_e = (1 2)(3 4)...([2k-1] [2k]) encodes the partial trace on the
    complement; tau_gamma = ([2k] 1)(2 3)...([2k-2] [2k-1]) the cyclic
    k-purity contraction on the subsystem.  For k=1 the two coincide.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = 2 * k
    tau_e = from_cycles([(2 * i, 2 * i + 1) for i in range(k)], n)
    tau_g = from_cycles([(n - 1, 0)] + [(2 * i + 1, 2 * i + 2) for i in range(k - 1)], n)
    return tau_e, tau_g


def second_moment_pairing(k: int) -> Perm:
    """tau_gamma acting independently on replicas 1..2k and 2k+1..4k, in S_{4k}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _, tau_g = staggered_pairings(k)
    n = 2 * k
    word = list(tau_g.word) + [n + x for x in tau_g.word]
    return Perm(word)


class BrauerPairing:
    """A perfect matching on 2k points (0-indexed), an element of B_k."""

    __slots__ = ("pairs", "k")

    def __init__(self, pairs: Iterable[tuple[int, int]]):
        norm = frozenset(frozenset(p) for p in pairs)
        pts = sorted(x for p in norm for x in p)
        if any(len(p) != 2 for p in norm) or pts != list(range(len(pts))):
            raise ValueError(f"not a perfect matching: {pairs}")
        self.pairs = norm
        self.k = len(norm)

    @classmethod
    def from_perm(cls, p: Perm) -> "BrauerPairing":
        """Interpret a fixed-point-free involution as a matching."""
        cyc = p.cycles()
        if any(len(c) != 2 for c in cyc):
            raise ValueError(f"{p} is not a pairing permutation")
        return cls([(c[0], c[1]) for c in cyc])

    def to_perm(self) -> Perm:
        return from_cycles([tuple(sorted(p)) for p in self.pairs], 2 * self.k)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BrauerPairing) and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(self.pairs)

    def __repr__(self) -> str:
        ordered = sorted(tuple(sorted(p)) for p in self.pairs)
        return f"BrauerPairing({ordered})"


def brauer_loop_count(a: BrauerPairing, b: BrauerPairing) -> int:
    """Closed loops formed by overlaying two matchings on 2k points.

    Every point has degree two in the overlay, so loops are exactly the
    connected components; counted by union-find.
    """
    if a.k != b.k:
        raise ValueError(f"half-degree mismatch: {a.k} != {b.k}")
    n = 2 * a.k
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for pairing in (a, b):
        for p in pairing.pairs:
            x, y = tuple(p)
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[rx] = ry
    return len({find(x) for x in range(n)})


def brauer_distance(a: BrauerPairing, b: BrauerPairing) -> int:
    """dist_B(a, b) = k - loops; equals half the Cayley distance in S_{2k}."""
    return a.k - brauer_loop_count(a, b)


def all_perms(n: int) -> Iterable[Perm]:
    """All of S_n in lexicographic word order."""
    for w in itertools.permutations(range(n)):
        yield Perm(w)


def all_pairings(two_k: int) -> Iterable[BrauerPairing]:
    """All (2k-1)!! perfect matchings on 2k points."""
    if two_k % 2:
        raise ValueError("need an even number of points")

    def rec(points: tuple[int, ...]):
        if not points:
            yield []
            return
        first, rest = points[0], points[1:]
        for i, other in enumerate(rest):
            for tail in rec(rest[:i] + rest[i + 1:]):
                yield [(first, other)] + tail

    for pairs in rec(tuple(range(two_k))):
        yield BrauerPairing(pairs)


def conjugacy_representative(ct: CycleType) -> Perm:
    """A canonical permutation with the given cycle type."""
    cycles = []
    start = 0
    for ln in ct:
        cycles.append(tuple(range(start, start + ln)))
        start += ln
    return from_cycles(cycles, sum(ct))
