"""Exact scalars: Gaussian rationals, named real parameters, unevaluated
exponentials, and truncated power series in the deformation symbol h.

Every value in the package bottoms out here.  Nothing is ever evaluated in
floating point; equality means the difference cancels to zero exactly.
"""
from __future__ import annotations

from fractions import Fraction

import sympy as sp

__all__ = [
    "H",
    "IUNIT",
    "Scalar",
    "param",
    "rational",
    "parse_exact",
    "htrunc",
    "is_zero_expr",
    "eq_expr",
]

# Deformation parameter of the h-series ring.
H = sp.Symbol("h")
IUNIT = sp.I

DEFAULT_SERIES_ORDER = 8

_PARAMS: dict[str, sp.Symbol] = {}


def param(name: str) -> sp.Symbol:
    """Named real parameter, shared package-wide so expressions compare."""
    sym = _PARAMS.get(name)
    if sym is None:
        if name == "h":
            sym = H
        else:
            sym = sp.Symbol(name, real=True)
        _PARAMS[name] = sym
    return sym


def rational(value) -> sp.Rational:
    """Exact rational from an int, Fraction, sympy Rational or 'num/den' text."""
    if isinstance(value, sp.Rational):
        return value
    if isinstance(value, sp.Expr):
        if value.is_Rational:
            return value
        raise ValueError(f"not an exact rational: {value!r}")
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return sp.Integer(value)
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        frac = Fraction(value.strip())
        return sp.Rational(frac.numerator, frac.denominator)
    if isinstance(value, float):
        raise TypeError("floating point input rejected; pass 'num/den' text")
    raise TypeError(f"cannot build a rational from {type(value).__name__}")


_SYMPIFY_LOCALS = {"i": sp.I, "I": sp.I, "E1": sp.exp(1)}


def parse_exact(text, extra: dict | None = None) -> sp.Expr:
    """Parse a fixture expression string into an exact sympy expression.

    Symbols other than the imaginary unit are created through :func:`param`
    so the same name always yields the same symbol.
    """
    if isinstance(text, sp.Expr):
        return text
    if isinstance(text, (int, Fraction)):
        return rational(text)
    locals_ = dict(_SYMPIFY_LOCALS)
    if extra:
        locals_.update(extra)
    expr = sp.sympify(text, locals=locals_, rational=True)
    subs = {
        s: param(s.name)
        for s in expr.free_symbols
        if s.name not in ("i", "I") and s is not _PARAMS.get(s.name)
    }
    return expr.subs(subs) if subs else expr


def htrunc(expr: sp.Expr, order: int) -> sp.Expr:
    """Drop all powers of h above `order`.  Input must be polynomial in h."""
    expr = sp.expand(expr)
    if not expr.has(H):
        return expr
    out = sp.S.Zero
    for (k,), coeff in sp.Poly(expr, H).terms():
        if k <= order:
            out += coeff * H**k
    return out


def is_zero_expr(expr: sp.Expr) -> bool:
    """Exact zero test, cheapest checks first.

    Rational expressions (in any set of generators, unevaluated
    exponentials included) are decided by the expanded numerator of the
    cancelled form; the simplify fallback only fires for exponent
    arithmetic that cancel cannot see.
    """
    if expr is sp.S.Zero:
        return True
    z = expr.is_zero
    if z is not None:
        return z
    expr = sp.expand(expr)
    z = expr.is_zero
    if z is not None:
        return z
    num, _ = sp.fraction(sp.cancel(sp.together(expr)))
    num = sp.expand(num)
    if num is sp.S.Zero or num == 0:
        return True
    if not num.atoms(sp.Function):
        # a nonzero expanded polynomial over the rationals
        return False
    return bool(sp.simplify(sp.powsimp(num, deep=True)).is_zero)


def eq_expr(a: sp.Expr, b: sp.Expr) -> bool:
    return is_zero_expr(sp.sympify(a) - sp.sympify(b))


class Scalar:
    """Element of Q(i)(params)[h]/(h^{N+1}).

    `order is None` means the plain (untruncated) coefficient tower; setting
    `order=N` puts the value in the series ring truncated after h^N.  Mixing
    the two embeds the plain value losslessly and truncates the result at the
    finer of the orders in play.
    """

    __slots__ = ("expr", "order")

    def __init__(self, value=0, order: int | None = None):
        if isinstance(value, Scalar):
            expr = value.expr
            if order is None:
                order = value.order
        elif isinstance(value, sp.Expr):
            expr = value
        elif isinstance(value, (int, Fraction, str)):
            expr = rational(value)
        elif isinstance(value, complex):
            raise TypeError("floating complex rejected; build from exact parts")
        else:
            raise TypeError(f"cannot build Scalar from {type(value).__name__}")
        if order is not None:
            expr = htrunc(expr, order)
        self.expr = sp.sympify(expr)
        self.order = order

    # -- ring structure -------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Scalar":
        return value if isinstance(value, Scalar) else Scalar(value)

    @staticmethod
    def _join(a: int | None, b: int | None) -> int | None:
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def _wrap(self, expr: sp.Expr, order: int | None) -> "Scalar":
        return Scalar(expr, order)

    def __add__(self, other):
        other = self._coerce(other)
        return self._wrap(self.expr + other.expr, self._join(self.order, other.order))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return self._wrap(self.expr - other.expr, self._join(self.order, other.order))

    def __rsub__(self, other):
        return self._coerce(other).__sub__(self)

    def __mul__(self, other):
        other = self._coerce(other)
        order = self._join(self.order, other.order)
        expr = self.expr * other.expr
        return self._wrap(expr, order)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.expr, self.order)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only nonnegative integer powers")
        out = Scalar(1, self.order)
        base = self
        for _ in range(exponent):
            out = out * base
        return out

    def inverse(self) -> "Scalar":
        if self.order is None:
            if self.is_zero():
                raise ZeroDivisionError("scalar is zero")
            return self._wrap(sp.S.One / self.expr, None)
        c0 = self.expr.subs(H, 0)
        if is_zero_expr(c0):
            raise ZeroDivisionError("series scalar has zero constant term")
        inv = sp.series(sp.S.One / self.expr, H, 0, self.order + 1).removeO()
        return self._wrap(sp.expand(inv), self.order)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return is_zero_expr(self.expr)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Scalar, sp.Expr, int, Fraction, str)):
            return NotImplemented
        other = self._coerce(other)
        diff = self.expr - other.expr
        order = self._join(self.order, other.order)
        if order is not None:
            diff = htrunc(diff, order)
        return is_zero_expr(diff)

    def __hash__(self):
        return hash((sp.expand(self.expr), self.order))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        tag = "" if self.order is None else f" +O(h^{self.order + 1})"
        return f"Scalar({self.expr}{tag})"

    def with_order(self, order: int | None) -> "Scalar":
        return Scalar(self.expr, order)

    def subs(self, mapping) -> "Scalar":
        return Scalar(self.expr.subs(mapping), self.order)


ZERO = Scalar(0)
ONE = Scalar(1)
