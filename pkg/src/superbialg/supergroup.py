"""Grassmann-valued function calculus on the GL(1|1) supergroup chart and
the graded Poisson bracket induced by a skew r-matrix.

The chart carries two bosonic coordinates x, y and two odd coordinates
psi, chi; coefficient functions live in Q(i)[x, y, e^x, e^-x].  The
invariant supervector fields come in four families: left/right invariant,
each with a left- or right-acting derivative.
"""
from __future__ import annotations

from dataclasses import dataclass

import sympy as sp

from .bialgebra import RMatrix
from .grassmann import GrassmannAlgebra, GrassmannElement
from .scalars import is_zero_expr

__all__ = [
    "GL11Chart",
    "CHART",
    "InvariantField",
    "invariant_fields",
    "apply_field",
    "sklyanin_bracket",
    "bracket_table",
    "field_bracket",
    "field_algebra_check",
]

X = sp.Symbol("x", real=True)
Y = sp.Symbol("y", real=True)


class GL11Chart:
    """Function algebra of the exponential coordinates on GL(1|1)."""

    def __init__(self):
        self.alg = GrassmannAlgebra(("psi", "chi"))
        self.x, self.y = X, Y
        self.coords = ("x", "y", "psi", "chi")
        self.parities = (0, 0, 1, 1)

    def coordinate(self, name: str) -> GrassmannElement:
        if name == "x":
            return self.alg.element({(): X})
        if name == "y":
            return self.alg.element({(): Y})
        return self.alg.gen(name)

    def function(self, terms: dict) -> GrassmannElement:
        """terms: tuple of generator names -> coefficient expression."""
        mapped = {
            tuple(self.alg.index[n] for n in mono): coeff
            for mono, coeff in terms.items()
        }
        return self.alg.element(mapped)

    def left_deriv(self, f: GrassmannElement, coord: str) -> GrassmannElement:
        if coord == "x":
            return f.boson_diff(X)
        if coord == "y":
            return f.boson_diff(Y)
        if coord in ("psi", "chi"):
            return f.left_deriv(coord)
        raise ValueError(f"unknown coordinate {coord!r}")

    def right_deriv(self, f: GrassmannElement, coord: str) -> GrassmannElement:
        if coord in ("x", "y"):
            return self.left_deriv(f, coord)
        if coord in ("psi", "chi"):
            return f.right_deriv(coord)
        raise ValueError(f"unknown coordinate {coord!r}")


CHART = GL11Chart()


@dataclass(frozen=True)
class InvariantField:
    """First-order operator sum_c coeff_c * d_c (left-acting derivative) or
    sum_c (d_c .) * coeff_c (right-acting), with Grassmann coefficients."""

    name: str
    side: str        # "L" (left-invariant) or "R" (right-invariant)
    deriv: str       # "l" or "r": which side the derivative acts from
    index: int       # 0..3, the generator it represents
    components: dict  # coord name -> GrassmannElement

    @property
    def parity(self) -> int:
        return CHART.parities[self.index]


def _fields() -> dict:
    alg = CHART.alg
    one = alg.one()
    psi, chi = alg.gen("psi"), alg.gen("chi")
    ex = alg.element({(): sp.exp(X)})
    emx = alg.element({(): sp.exp(-X)})
    f = {}

    f[("L", "l", 0)] = {"x": one, "psi": -psi, "chi": chi}
    f[("L", "l", 1)] = {"y": one}
    f[("L", "l", 2)] = {"y": -chi, "psi": -one}
    f[("L", "l", 3)] = {"chi": -one}

    f[("L", "r", 0)] = {"x": one, "psi": -psi, "chi": chi}
    f[("L", "r", 1)] = {"y": one}
    f[("L", "r", 2)] = {"y": chi, "psi": -one}
    f[("L", "r", 3)] = {"chi": -one}

    f[("R", "l", 0)] = {"x": one}
    f[("R", "l", 1)] = {"y": one}
    f[("R", "l", 2)] = {"psi": -emx}
    f[("R", "l", 3)] = {"y": psi * ex, "chi": -ex}

    f[("R", "r", 0)] = {"x": one}
    f[("R", "r", 1)] = {"y": one}
    f[("R", "r", 2)] = {"psi": -emx}
    f[("R", "r", 3)] = {"y": -(psi * ex), "chi": -ex}

    out = {}
    for (side, deriv, idx), comps in f.items():
        out[(side, deriv, idx)] = InvariantField(
            name=f"{side}{deriv}{idx+1}", side=side, deriv=deriv, index=idx,
            components=comps,
        )
    return out


_FIELDS = _fields()


def invariant_fields() -> dict:
    """All sixteen fields, keyed by (side, deriv, generator index)."""
    return dict(_FIELDS)


def apply_field(field: InvariantField, f: GrassmannElement) -> GrassmannElement:
    """Left-derivative fields multiply their coefficients from the left of
    the derivative; right-derivative fields from the right."""
    out = CHART.alg.zero()
    for coord, comp in field.components.items():
        if field.deriv == "l":
            out = out + comp * CHART.left_deriv(f, coord)
        else:
            out = out + CHART.right_deriv(f, coord) * comp
    return out


def field_bracket(f1: InvariantField, f2: InvariantField):
    """Graded commutator of two same-family left-derivative fields,
    returned as its action on each coordinate function."""
    sign = (-1) ** (f1.parity * f2.parity)
    out = {}
    for coord in CHART.coords:
        c = CHART.coordinate(coord)
        val = apply_field(f1, apply_field(f2, c)) - (
            apply_field(f2, apply_field(f1, c)).scale(sign)
        )
        out[coord] = val
    return out


def field_algebra_check() -> dict:
    """The left-invariant left-derivative fields represent the i-dropped
    gl(1|1) relations with a global sign; returns the verification table."""
    from .catalog import gl11

    g = gl11("nonstandard")
    fields = [_FIELDS[("L", "l", i)] for i in range(4)]
    report = {}
    for i in range(4):
        for j in range(4):
            got = field_bracket(fields[i], fields[j])
            ok = True
            for coord in CHART.coords:
                expect = CHART.alg.zero()
                for k in range(4):
                    c = g.f[i][j][k]
                    if not is_zero_expr(c):
                        expect = expect + apply_field(fields[k], CHART.coordinate(coord)).scale(c)
                if not got[coord].eq(expect):
                    ok = False
            report[(i + 1, j + 1)] = ok
    return report


def sklyanin_bracket(
    r: RMatrix | dict,
    f: GrassmannElement,
    h: GrassmannElement,
    part: str = "both",
) -> GrassmannElement:
    """Graded Poisson bracket {f, h} = {f, h}^L - {f, h}^R built from the
    invariant fields contracted with the r-matrix; `part` selects "L", "R",
    or the difference."""
    coeffs = r.coeffs if isinstance(r, RMatrix) else r
    out = CHART.alg.zero()
    for (i, j), c in coeffs.items():
        if part in ("L", "both"):
            left = apply_field(_FIELDS[("L", "r", i)], f)
            right = apply_field(_FIELDS[("L", "l", j)], h)
            out = out + (left * right).scale(c)
        if part in ("R", "both"):
            left = apply_field(_FIELDS[("R", "r", i)], f)
            right = apply_field(_FIELDS[("R", "l", j)], h)
            term = (left * right).scale(c)
            out = (out - term) if part == "both" else (out + term)
    return out


def bracket_table(r: RMatrix, split: bool = False) -> dict:
    """Poisson brackets of all coordinate pairs; with `split`, the L and R
    contributions are reported separately alongside the difference."""
    pairs = [
        ("x", "y"), ("x", "psi"), ("x", "chi"),
        ("y", "psi"), ("y", "chi"),
        ("psi", "psi"), ("psi", "chi"), ("chi", "chi"),
    ]
    out = {}
    for a, b in pairs:
        fa, fb = CHART.coordinate(a), CHART.coordinate(b)
        entry = {"total": sklyanin_bracket(r, fa, fb)}
        if split:
            entry["L"] = sklyanin_bracket(r, fa, fb, part="L")
            entry["R"] = sklyanin_bracket(r, fa, fb, part="R")
        out[(a, b)] = entry
    return out
