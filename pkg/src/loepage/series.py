"""Exact recovery of 1/D-series coefficients from integer-dimension samples.

The exact purity engines return rational numbers at concrete integer
dimensions; the values are rational functions of the dimension parameter
with a denominator that is known in advance (a product of Weingarten
content factors).  Sampling at enough integers therefore determines the
numerator polynomial exactly, after which the large-D expansion follows
from exact power-series division.  This certifies printed series
coefficients by rational equality, which a fixed 5-point fit of a
non-polynomial function cannot do; the 5-point Vandermonde fit is kept as
the lightweight presentation-layer variant.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

Poly = list[Fraction]  # coefficients, index = power


def poly_mul(a: Poly, b: Poly) -> Poly:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_eval(p: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def content_lcm_poly(n: int, var_power: int = 1) -> Poly:
    """lcm over partitions of n of prod over cells (X + j - i), as a
    polynomial in s where X = s^var_power.

    Multiplicity of the factor (X + c) is the largest number of cells on
    diagonal c in any single Young diagram of size n.
    """
    from .classalg import partitions

    mult: dict[int, int] = {}
    for lam in partitions(n):
        diag: dict[int, int] = {}
        for i, row in enumerate(lam):
            for j in range(row):
                diag[j - i] = diag.get(j - i, 0) + 1
        for c, m in diag.items():
            mult[c] = max(mult.get(c, 0), m)
    out: Poly = [Fraction(1)]
    for c, m in sorted(mult.items()):
        factor = [Fraction(c)] + [Fraction(0)] * (var_power - 1) + [Fraction(1)]
        for _ in range(m):
            out = poly_mul(out, factor)
    return out


def newton_interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Poly:
    """Exact interpolating polynomial through (xs, ys), as coefficients."""
    m = len(xs)
    coef = list(ys)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form to monomial coefficients
    poly: Poly = [Fraction(0)] * m
    acc: Poly = [Fraction(1)]
    for j in range(m):
        for i, c in enumerate(acc):
            poly[i] += coef[j] * c
        acc = poly_mul(acc, [-xs[j], Fraction(1)])
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def series_coefficients(
    f: Callable[[int], Fraction],
    denominator: Poly,
    numerator_degree_bound: int,
    orders: Sequence[int],
    s_start: int = 2,
) -> dict[int, Fraction]:
    """Exact coefficients of f(s) = sum c_p s^(-p) at the requested orders.

    f must be a rational function with the given polynomial denominator and
    numerator degree <= numerator_degree_bound.  Samples f at consecutive
    integers, interpolates the numerator exactly, verifies two extra
    points, then divides the power series in 1/s.
    """
    B = numerator_degree_bound
    xs = [Fraction(s) for s in range(s_start, s_start + B + 1)]
    ys = [f(int(x)) * poly_eval(denominator, x) for x in xs]
    num = newton_interpolate(xs, ys)
    for s in (s_start + B + 1, s_start + B + 2):
        if poly_eval(num, Fraction(s)) != f(s) * poly_eval(denominator, Fraction(s)):
            raise ArithmeticError(
                "numerator degree bound too small for exact reconstruction"
            )
    return _laurent_quotient(num, denominator, orders)


def _laurent_quotient(num: Poly, den: Poly, orders: Sequence[int]) -> dict[int, Fraction]:
    """Coefficients of num(s)/den(s) expanded in powers of 1/s."""
    dn, dd = len(num) - 1, len(den) - 1
    depth = max(orders) + dn - dd + 1
    if depth < 1:
        depth = 1
    # A(t) = num reversed, Bden(t) = den reversed, t = 1/s
    a = [num[dn - p] if 0 <= dn - p <= dn else Fraction(0) for p in range(depth)]
    b = [den[dd - p] if 0 <= dd - p <= dd else Fraction(0) for p in range(depth)]
    q = [Fraction(0)] * depth
    lead = b[0]
    for p in range(depth):
        acc = a[p]
        for i in range(1, p + 1):
            acc -= b[i] * q[p - i]
        q[p] = acc / lead
    # num/den = s^(dn-dd) * sum q[p] t^p  ->  coefficient of s^-(p-(dn-dd))
    out = {}
    for order in orders:
        p = order + dn - dd
        out[order] = q[p] if 0 <= p < depth else Fraction(0)
    return out


def fit_inverse_powers(
    samples: Sequence[tuple[int, Fraction]], j0: int, count: int
) -> list[Fraction]:
    """Solve the exact Vandermonde system for the model
    sum_{j=j0}^{j0+count-1} c_j D^-j through the given (D, value) samples."""
    if len(samples) != count:
        raise ValueError("need exactly `count` samples")
    rows = []
    rhs = []
    for D, val in samples:
        rows.append([Fraction(1, D**j) for j in range(j0, j0 + count)])
        rhs.append(Fraction(val))
    from .weingarten import _solve_fraction

    return _solve_fraction(rows, rhs)
