"""Independent oracles for the test suite.

These deliberately avoid the package's own code paths: the sign rules are
re-derived by direct enumeration, and the rank oracle is a from-scratch
Gaussian elimination over Gaussian-rational fractions.
"""
from __future__ import annotations

from fractions import Fraction

import sympy as sp


def gtensor_entry_oracle(A, B, pa_row, pa_col, pb_row, pb_col, i, j, k, l):
    """(A (x) B)_{ij;kl} by writing out the sign rule for one entry."""
    sign = (-1) ** (pb_row[j] * ((pa_row[i] + pa_col[k]) % 2))
    return sign * A[i][k] * B[j][l]


def supertranspose_oracle(A, row_par, col_par, mirror=True):
    """Blockwise transpose with the sign on one mixed block."""
    n, m = len(row_par), len(col_par)
    out = [[None] * n for _ in range(m)]
    for a in range(m):
        for b in range(n):
            if mirror:
                sign = -1 if (row_par[b] == 1 and col_par[a] == 0) else 1
            else:
                sign = -1 if (row_par[b] == 0 and col_par[a] == 1) else 1
            out[a][b] = sign * A[b][a]
    return out


class GaussRat:
    """Gaussian rational (re, im) over Fraction; just enough arithmetic for
    row reduction."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, o):
        return GaussRat(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return GaussRat(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        return GaussRat(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    def inv(self):
        d = self.re * self.re + self.im * self.im
        return GaussRat(self.re / d, -self.im / d)

    def __bool__(self):
        return bool(self.re) or bool(self.im)


def rank_oracle(rows) -> int:
    """Row-echelon rank of a matrix of GaussRat (or (re, im) pairs)."""
    m = [
        [c if isinstance(c, GaussRat) else GaussRat(*c) for c in row]
        for row in rows
    ]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = m[rank][col].inv()
        m[rank] = [inv * c for c in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def expr_to_gauss(expr) -> GaussRat:
    re, im = sp.sympify(expr).as_real_imag()
    return GaussRat(Fraction(int(sp.nsimplify(re).p), int(sp.nsimplify(re).q)),
                    Fraction(int(sp.nsimplify(im).p), int(sp.nsimplify(im).q)))


def grassmann2_product_oracle(t1, t2):
    """Multiply two elements of the 2-generator Grassmann algebra written as
    coefficient 4-tuples (1, g1, g2, g1*g2); brute-force expansion."""
    a0, a1, a2, a12 = t1
    b0, b1, b2, b12 = t2
    return (
        a0 * b0,
        a0 * b1 + a1 * b0,
        a0 * b2 + a2 * b0,
        a0 * b12 + a12 * b0 + a1 * b2 - a2 * b1,
    )
