"""Exact and asymptotic Weingarten functions for the unitary group.

The exact table is the (pseudo-)inverse of the Gram matrix
G_{pi sigma} = D^{#(pi sigma^-1)} and is defined here for D >= n.  Two
independent backends are provided and cross-validated:

* ``characters``: the character-sum formula, with symmetric-group
  characters from the Murnaghan-Nakayama rule and content products for the
  dimension polynomial in D;
* ``gram``: exact rational solve of the orthogonality system, reduced to
  the conjugacy-class basis (one unknown per partition of n).

Note: the inversion fixes Wg at cycle type [2] (n=2) to -1/(D(D^2-1));
some references print this value without the sign.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .classalg import class_size, count_table, partitions
from .perm import CycleType, Perm, compose
from .nc import mobius

MAX_GRAM_DEGREE = 8
MAX_CHARACTER_DEGREE = 10

_table_cache: dict[tuple[int, int], "WeingartenTable"] = {}
_table_lock = threading.Lock()


@lru_cache(maxsize=None)
def sn_character(lam: CycleType, mu: CycleType) -> int:
    """Character chi_lambda(mu) of S_n by the Murnaghan-Nakayama rule.

    Recursively strips a border strip of size mu[0] from lambda in every
    legal way; a strip spanning rows top..bottom leaves row i at
    lam[i+1]-1 for top <= i < bottom, with the bottom row absorbing the
    remainder.
    """
    if sum(lam) != sum(mu):
        raise ValueError("lambda and mu must partition the same n")
    if not lam:
        return 1
    r, rest = mu[0], mu[1:]
    rows = len(lam)
    total = 0
    for top in range(rows):
        for bottom in range(top, rows):
            tail = lam[top] - r + (bottom - top)
            if not 0 <= tail <= lam[bottom] - 1:
                continue
            if bottom + 1 < rows and tail < lam[bottom + 1]:
                continue
            new = list(lam)
            for i in range(top, bottom):
                new[i] = lam[i + 1] - 1
            new[bottom] = tail
            shape = tuple(x for x in new if x > 0)
            total += (-1) ** (bottom - top) * sn_character(shape, rest)
    return total


@lru_cache(maxsize=None)
def irrep_dimension(lam: CycleType) -> int:
    """dim of the S_n irrep lambda, by the hook length formula."""
    n = sum(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for r in lam[i + 1:] if r > j)
            hooks *= arm + leg + 1
    return math.factorial(n) // hooks


def content_product(lam: CycleType, dim: int) -> int:
    """prod over cells (i, j) of (dim + j - i), 0-indexed cells."""
    out = 1
    for i, row in enumerate(lam):
        for j in range(row):
            out *= dim + j - i
    return out


@dataclass(frozen=True)
class WeingartenTable:
    """Exact Weingarten values keyed by the cycle type of pi sigma^-1."""

    n: int
    dim: int
    values: dict[CycleType, Fraction]

    def __call__(self, ct: CycleType) -> Fraction:
        return self.values[ct]

    def of_pair(self, a: Perm, b: Perm) -> Fraction:
        return self.values[compose(a, b.inverse()).cycle_type()]


def _wg_characters(n: int, dim: int) -> dict[CycleType, Fraction]:
    lams = partitions(n)
    fact = math.factorial(n)
    out = {}
    for ct in lams:
        acc = Fraction(0)
        for lam in lams:
            if len(lam) > dim:
                continue
            acc += Fraction(irrep_dimension(lam) * sn_character(lam, ct),
                            content_product(lam, dim))
        out[ct] = acc / fact
    return out


def _wg_gram(n: int, dim: int) -> dict[CycleType, Fraction]:
    """Solve sum_sigma D^{#(pi sigma^-1)} Wg(type sigma) = delta_{pi, e}
    in the class basis: one equation per cycle type of pi."""
    table = count_table(n)
    lams = partitions(n)
    idx = {ct: i for i, ct in enumerate(lams)}
    m = len(lams)
    # A[i][j] = sum over sigma in class j of D^{#(rep_i sigma^-1)}
    A = [[Fraction(0)] * m for _ in range(m)]
    for ct_pi in lams:
        i = idx[ct_pi]
        for (t_sigma, t_prod), cnt in table[ct_pi].items():
            A[i][idx[t_sigma]] += cnt * Fraction(dim) ** len(t_prod)
    e_type = (1,) * n
    rhs = [Fraction(1) if ct == e_type else Fraction(0) for ct in lams]
    sol = _solve_fraction(A, rhs)
    return {ct: sol[idx[ct]] for ct in lams}


def _solve_fraction(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    m = len(A)
    M = [row[:] + [b[i]] for i, row in enumerate(A)]
    for col in range(m):
        piv = next(r for r in range(col, m) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(m):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[r][m] for r in range(m)]


def weingarten_exact(n: int, dim: int, backend: str = "characters") -> WeingartenTable:
    """Exact rational Weingarten table for S_n at Hilbert dimension ``dim``.

    Requires dim >= n (invertible Gram matrix).  Results are cached per
    (n, dim); the two backends agree exactly and the characters backend is
    the default (cheapest, no sweep of S_n).
    """
    if dim < n:
        raise ValueError(f"need dim >= n for an invertible Gram matrix, got dim={dim}, n={n}")
    if backend not in ("characters", "gram"):
        raise ValueError(f"unknown backend {backend!r}")
    limit = MAX_GRAM_DEGREE if backend == "gram" else MAX_CHARACTER_DEGREE
    if n > limit:
        raise ValueError(f"degree {n} unsupported for backend {backend} (max {limit})")
    key = (n, dim, backend)
    with _table_lock:
        if key in _table_cache:
            return _table_cache[key]
    values = _wg_characters(n, dim) if backend == "characters" else _wg_gram(n, dim)
    tab = WeingartenTable(n, dim, values)
    with _table_lock:
        _table_cache.setdefault(key, tab)
        return _table_cache[key]


def gram_entry(a: Perm, b: Perm, dim: int) -> Fraction:
    """G_{ab} = D^{#(a b^-1)}, the overlap tr[T_a T_{b^-1}]."""
    return Fraction(dim) ** compose(a, b.inverse()).cycle_count()


def weingarten_asymptotic(a: Perm, b: Perm, dim: int) -> float:
    """Leading term Moebius(a, b) / dim^(2n - #(a b^-1)); relative error O(1/dim^2)."""
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} != {b.n}")
    cyc = compose(a, b.inverse()).cycle_count()
    return mobius(a, b) / dim ** (2 * a.n - cyc)
