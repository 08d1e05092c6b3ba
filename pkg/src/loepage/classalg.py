"""Conjugacy-class tables for S_n used by the exact summation engines.

Everything here is a function of cycle types only.  The expensive objects
(one full sweep of S_n per conjugacy class) are computed once per degree
and cached for the life of the process; completed tables are immutable.
"""
from __future__ import annotations

import itertools
import math
import threading
from functools import lru_cache

from .perm import CycleType, Perm, conjugacy_representative, word_cycle_type

_lock = threading.Lock()
_count_tables: dict[int, dict] = {}
_boundary_tables: dict[tuple, dict] = {}


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[CycleType, ...]:
    """All partitions of n as descending tuples, reverse-lex ordered."""

    def rec(rest: int, maxpart: int):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return tuple(rec(n, n))


@lru_cache(maxsize=None)
def class_size(ct: CycleType) -> int:
    """|conjugacy class| = n! / (prod parts * prod mult!)."""
    n = sum(ct)
    denom = 1
    for part in ct:
        denom *= part
    for m in set(ct):
        denom *= math.factorial(ct.count(m))
    return math.factorial(n) // denom


def _sweep_words(n: int):
    return itertools.permutations(range(n))


def count_table(n: int) -> dict[CycleType, dict[tuple[CycleType, CycleType], int]]:
    """table[t_a][(t_x, t_prod)] = #{x in class t_x : type(x * rep(t_a)^-1) = t_prod}.

    One sweep of S_n per class of a; O(|S_n| p(n)) total.  By symmetry of
    inversion this also counts, for fixed x_rep in class t_x, the elements
    a in class t_a with type(x_rep a^-1) = t_prod.
    """
    with _lock:
        if n in _count_tables:
            return _count_tables[n]
    table: dict[CycleType, dict] = {}
    reps = [(ct, conjugacy_representative(ct).inverse().word) for ct in partitions(n)]
    for ct_a, inv_word in reps:
        counts: dict[tuple[CycleType, CycleType], int] = {}
        for xw in _sweep_words(n):
            t_x = word_cycle_type(xw)
            prod = tuple(xw[inv_word[i]] for i in range(n))
            key = (t_x, word_cycle_type(prod))
            counts[key] = counts.get(key, 0) + 1
        table[ct_a] = counts
    with _lock:
        _count_tables.setdefault(n, table)
        return _count_tables[n]


def boundary_table(
    a: Perm, b: Perm
) -> dict[CycleType, dict[tuple[int, int], int]]:
    """table[t_sigma][(ca, cb)] = #{sigma in class t_sigma :
    #(sigma^-1 a) = ca, #(sigma^-1 b) = cb}.

    Single sweep of S_n; a and b are the fixed boundary permutations.
    """
    if a.n != b.n:
        raise ValueError("boundary degree mismatch")
    n = a.n
    key = (n, a.word, b.word)
    with _lock:
        if key in _boundary_tables:
            return _boundary_tables[key]
    aw, bw = a.word, b.word
    table: dict[CycleType, dict[tuple[int, int], int]] = {}
    for sw in _sweep_words(n):
        inv = [0] * n
        for i, x in enumerate(sw):
            inv[x] = i
        ca = len(word_cycle_type(tuple(inv[aw[i]] for i in range(n))))
        cb = len(word_cycle_type(tuple(inv[bw[i]] for i in range(n))))
        t = word_cycle_type(sw)
        sub = table.setdefault(t, {})
        k2 = (ca, cb)
        sub[k2] = sub.get(k2, 0) + 1
    with _lock:
        _boundary_tables.setdefault(key, table)
        return _boundary_tables[key]
