"""Grassmann polynomials: finitely many anticommuting generators over an
exact sympy coefficient ring.

Elements are dicts from sorted generator-index tuples to coefficients;
squares of generators vanish and reordering signs are absorbed into the
coefficients.  Bosonic symbols (coordinates, parameters) live inside the
coefficients and commute with everything.
"""
from __future__ import annotations

import sympy as sp

from .scalars import is_zero_expr, parse_exact

__all__ = ["GrassmannAlgebra", "GrassmannElement"]


class GrassmannAlgebra:
    def __init__(self, names, simplify=None):
        self.names = tuple(names)
        self.index = {n: i for i, n in enumerate(self.names)}
        # hook applied to coefficients after arithmetic (e.g. the parameter
        # reduction rule of the disc system); must be exactness-preserving
        self.simplify = simplify

    def element(self, terms=None) -> "GrassmannElement":
        return GrassmannElement(self, terms or {})

    def zero(self) -> "GrassmannElement":
        return self.element()

    def one(self) -> "GrassmannElement":
        return self.element({(): sp.S.One})

    def scalar(self, coeff) -> "GrassmannElement":
        return self.element({(): parse_exact(coeff)})

    def gen(self, name) -> "GrassmannElement":
        return self.element({(self.index[name],): sp.S.One})


def _merge_sign(m1: tuple, m2: tuple):
    """Concatenate two sorted monomials; None if a generator repeats."""
    out = []
    sign = 1
    i = j = 0
    while i < len(m1) and j < len(m2):
        if m1[i] == m2[j]:
            return None, 0
        if m1[i] < m2[j]:
            out.append(m1[i])
            i += 1
        else:
            # m2[j] moves past the remaining len(m1) - i odd generators
            if (len(m1) - i) % 2:
                sign = -sign
            out.append(m2[j])
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out), sign


class GrassmannElement:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: GrassmannAlgebra, terms: dict):
        self.alg = alg
        clean = {}
        for mono, coeff in terms.items():
            coeff = sp.sympify(coeff)
            if alg.simplify is not None:
                coeff = alg.simplify(coeff)
            if not is_zero_expr(coeff):
                clean[tuple(mono)] = coeff
        self.terms = clean

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GrassmannElement):
            return other
        return self.alg.element({(): parse_exact(other)})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, sp.S.Zero) + c
        return GrassmannElement(self.alg, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __neg__(self):
        return GrassmannElement(self.alg, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono, sign = _merge_sign(m1, m2)
                if mono is None:
                    continue
                out[mono] = out.get(mono, sp.S.Zero) + sign * c1 * c2
        return GrassmannElement(self.alg, out)

    def __rmul__(self, other):
        # scalars commute; only Grassmann x Grassmann order matters
        return self._coerce(other) * self

    def scale(self, coeff):
        coeff = sp.sympify(coeff)
        return GrassmannElement(
            self.alg, {m: coeff * c for m, c in self.terms.items()}
        )

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def eq(self, other) -> bool:
        return (self - other).is_zero()

    def parity(self) -> int | None:
        """0/1 for homogeneous elements, None when mixed, 0 for zero."""
        if not self.terms:
            return 0
        parities = {len(m) % 2 for m in self.terms}
        return parities.pop() if len(parities) == 1 else None

    def coeff(self, *names) -> sp.Expr:
        mono = tuple(sorted(self.alg.index[n] for n in names))
        return self.terms.get(mono, sp.S.Zero)

    def body(self) -> sp.Expr:
        return self.terms.get((), sp.S.Zero)

    def soul(self) -> "GrassmannElement":
        return GrassmannElement(
            self.alg, {m: c for m, c in self.terms.items() if m}
        )

    # -- calculus --------------------------------------------------------------

    def left_deriv(self, name: str) -> "GrassmannElement":
        """Graded derivative acting from the left."""
        k = self.alg.index[name]
        out = {}
        for mono, c in self.terms.items():
            if k in mono:
                pos = mono.index(k)
                rest = mono[:pos] + mono[pos + 1 :]
                out[rest] = out.get(rest, sp.S.Zero) + (-1) ** pos * c
        return GrassmannElement(self.alg, out)

    def right_deriv(self, name: str) -> "GrassmannElement":
        """Graded derivative acting from the right."""
        k = self.alg.index[name]
        out = {}
        for mono, c in self.terms.items():
            if k in mono:
                pos = mono.index(k)
                rest = mono[:pos] + mono[pos + 1 :]
                sign = (-1) ** (len(mono) - 1 - pos)
                out[rest] = out.get(rest, sp.S.Zero) + sign * c
        return GrassmannElement(self.alg, out)

    def boson_diff(self, symbol) -> "GrassmannElement":
        return GrassmannElement(
            self.alg, {m: sp.diff(c, symbol) for m, c in self.terms.items()}
        )

    def map_coeff(self, fn) -> "GrassmannElement":
        return GrassmannElement(self.alg, {m: fn(c) for m, c in self.terms.items()})

    def subs(self, mapping) -> "GrassmannElement":
        return self.map_coeff(lambda c: c.subs(mapping))

    def convert(self, images: dict, target: "GrassmannAlgebra") -> "GrassmannElement":
        """Rewrite through generator images (a change of odd coordinates);
        `images` maps this algebra's generator names to target elements."""
        out = target.zero()
        for mono, c in self.terms.items():
            term = target.element({(): c})
            for idx in mono:
                term = term * images[self.alg.names[idx]]
            out = out + term
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms, key=lambda m: (len(m), m)):
            label = "*".join(self.alg.names[i] for i in mono) or "1"
            bits.append(f"({self.terms[mono]})*{label}")
        return " + ".join(bits)
