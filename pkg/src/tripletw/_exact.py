"""Exact rational linear algebra helpers shared by the library modules.

Everything here is plain integer or Fraction arithmetic on tuples; no
floating point enters anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

IntVec = tuple[int, ...]
IntMat = tuple[tuple[int, ...], ...]


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_neg(u):
    return tuple(-a for a in u)


def vec_scale(c, u):
    return tuple(c * a for a in u)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v, strict=True))


def mat_vec(m: IntMat, v):
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def mat_mul(a: IntMat, b: IntMat) -> IntMat:
    n = len(a)
    cols = range(len(b[0]))
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in cols)
        for i in range(n)
    )


def identity_matrix(n: int) -> IntMat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def frac_matrix_inverse(m) -> tuple[tuple[tuple[Fraction, ...], ...], Fraction]:
    """Invert a square matrix by Gauss-Jordan elimination.

    Returns (inverse, determinant), both exact.  Raises ValueError on a
    singular matrix.
    """
    n = len(m)
    a = [[Fraction(m[i][j]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
            det = -det
        pv = a[col][col]
        det *= pv
        a[col] = [x / pv for x in a[col]]
        inv[col] = [x / pv for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv), det


def sqrt_floor(x: Fraction) -> int:
    """Largest integer n >= 0 with n*n <= x, for x >= 0."""
    if x < 0:
        raise ValueError("negative argument")
    n = isqrt(x.numerator // x.denominator)
    while (n + 1) * (n + 1) * x.denominator <= x.numerator:
        n += 1
    while n * n * x.denominator > x.numerator:
        n -= 1
    return n


def sqrt_upper(x: Fraction) -> Fraction:
    """A rational upper bound for sqrt(x), exact when x is a perfect square.

    Uses sqrt(num/den) = sqrt(num*den)/den so the bound overshoots by less
    than 1/den.
    """
    if x < 0:
        raise ValueError("negative argument")
    m = x.numerator * x.denominator
    s = isqrt(m)
    if s * s == m:
        return Fraction(s, x.denominator)
    return Fraction(s + 1, x.denominator)
