"""Catalog of (2|2) Lie superalgebras and the dual-side algebras paired with
gl(1|1), plus the gl(1|1) automorphism family and the case-family solutions
of the dual constraint system with their verification matrices.

Generators are 0-based internally; basis order is always (even, even, odd,
odd).  Standard-basis odd-odd brackets carry the imaginary unit so that real
forms stay real; `LieSuperalgebra.to_nonstandard` drops it.
"""
from __future__ import annotations

import json
from fractions import Fraction

import sympy as sp

from .liealg import LieSuperalgebra, make_superalgebra
from .scalars import Scalar, param, parse_exact, rational
from .supermatrix import SuperMatrix

__all__ = [
    "gl11",
    "load",
    "load_dual",
    "catalog_names",
    "dual_names",
    "catalog_entry",
    "dual_entry",
    "automorphism_matrix",
    "case_family",
    "case_isomorphisms",
    "algebra_to_json",
    "algebra_from_json",
    "normalize_label",
]

P22 = (0, 0, 1, 1)
_I = sp.I


def _p(name):
    return param(name)


def normalize_label(name: str) -> str:
    out = name.strip().replace("⊕", "+").replace(" ", "")
    out = out.replace("(+)", "+")
    aliases = {
        "gl11": "C2_-1+A",
        "gl(1|1)": "C2_-1+A",
        "I_(2,2)": "I22",
        "I(2,2)": "I22",
    }
    return aliases.get(out, out)


class _Entry:
    def __init__(self, label, brackets, params=(), constraint=None, samples=None, comment=""):
        self.label = label
        self.brackets = brackets  # callable(params dict) -> bracket dict
        self.params = tuple(params)
        self.constraint = constraint  # callable(params dict) -> bool, numeric only
        self.samples = samples or [{}]
        self.comment = comment

    def build(self, params: dict | None, *, check: bool = True) -> LieSuperalgebra:
        values = {}
        for name in self.params:
            if params and name in params:
                values[name] = parse_exact(params[name])
            else:
                values[name] = _p(name)
        if check and self.constraint is not None:
            numeric = {k: v for k, v in values.items() if v.is_number}
            if len(numeric) == len(values) and not self.constraint(values):
                raise ValueError(
                    f"parameters {values} violate the printed constraint for {self.label}"
                )
        return make_superalgebra(self.label, P22, self.brackets(values))

    def sample_grid(self):
        return [dict(s) for s in self.samples]


def _grid(name, values):
    return [{name: rational(v)} for v in values]


def _grid2(n1, n2, pairs):
    return [{n1: rational(a), n2: rational(b)} for a, b in pairs]


# --------------------------------------------------------------------------
# trivial indecomposable algebras
# --------------------------------------------------------------------------

_TABLE1 = [
    _Entry("D5", lambda v: {(0, 2): {2: 1}, (0, 3): {3: 1}, (1, 3): {2: 1}}),
    _Entry(
        "D6",
        lambda v: {(0, 2): {2: 1}, (0, 3): {3: 1}, (1, 2): {3: -1}, (1, 3): {2: 1}},
    ),
    _Entry(
        "D1_pq",
        lambda v: {(0, 1): {1: 1}, (0, 2): {2: v["p"]}, (0, 3): {3: v["q"]}},
        params=("p", "q"),
        constraint=lambda v: v["p"] * v["q"] != 0 and v["p"] >= v["q"],
        samples=_grid2("p", "q", [(1, 1), (2, 1), (3, "1/2"), (-1, -2), ("1/2", "1/3")]),
    ),
    _Entry(
        "D8_p",
        lambda v: {(0, 1): {1: 1}, (0, 2): {2: v["p"]}, (0, 3): {2: 1, 3: v["p"]}},
        params=("p",),
        constraint=lambda v: v["p"] != 0,
        samples=_grid("p", [1, -1, "1/2", 2, "-3/2"]),
    ),
    _Entry(
        "D9_pq",
        lambda v: {
            (0, 1): {1: 1},
            (0, 2): {2: v["p"], 3: -v["q"]},
            (0, 3): {2: v["q"], 3: v["p"]},
        },
        params=("p", "q"),
        constraint=lambda v: v["q"] > 0,
        samples=_grid2("p", "q", [(0, 1), (1, 2), (-1, "1/2"), (2, 3), ("1/2", 1)]),
    ),
    _Entry(
        "D10_p",
        lambda v: {
            (0, 1): {1: 1},
            (0, 2): {2: v["p"] + 1},
            (0, 3): {3: v["p"]},
            (1, 3): {2: 1},
        },
        params=("p",),
        samples=_grid("p", [0, 1, -1, "1/2", -2]),
    ),
]

# --------------------------------------------------------------------------
# nontrivial indecomposable algebras
# --------------------------------------------------------------------------

_POSITIVE = _grid("p", [1, 2, "1/2", 3, "1/4"])

_TABLE2 = [
    _Entry(
        "D7(1/2,1/2)^1",
        lambda v: {
            (0, 1): {1: 1},
            (0, 2): {2: sp.Rational(1, 2)},
            (0, 3): {3: sp.Rational(1, 2)},
            (2, 2): {1: _I},
            (3, 3): {1: _I},
        },
    ),
    _Entry(
        "D7(1/2,1/2)^2",
        lambda v: {
            (0, 1): {1: 1},
            (0, 2): {2: sp.Rational(1, 2)},
            (0, 3): {3: sp.Rational(1, 2)},
            (2, 2): {1: _I},
            (3, 3): {1: -_I},
        },
    ),
    _Entry(
        "D7(1/2,1/2)^3",
        lambda v: {
            (0, 1): {1: 1},
            (0, 2): {2: sp.Rational(1, 2)},
            (0, 3): {3: sp.Rational(1, 2)},
            (2, 2): {1: _I},
        },
    ),
    _Entry(
        "D7(1-p,p)",
        lambda v: {
            (0, 1): {1: 1},
            (0, 2): {2: v["p"]},
            (0, 3): {3: 1 - v["p"]},
            (2, 3): {1: _I},
        },
        params=("p",),
        constraint=lambda v: v["p"] <= sp.Rational(1, 2),
        samples=_grid("p", ["1/2", 0, -1, "1/3", "-1/2"]),
    ),
    _Entry(
        "D8(1/2)",
        lambda v: {
            (0, 1): {1: 1},
            (0, 2): {2: sp.Rational(1, 2)},
            (0, 3): {2: 1, 3: sp.Rational(1, 2)},
            (3, 3): {1: _I},
        },
    ),
    _Entry(
        "D9(1/2,p)",
        lambda v: {
            (0, 1): {1: 1},
            (0, 2): {2: sp.Rational(1, 2), 3: -v["p"]},
            (0, 3): {2: v["p"], 3: sp.Rational(1, 2)},
            (2, 2): {1: _I},
            (3, 3): {1: _I},
        },
        params=("p",),
        constraint=lambda v: v["p"] > 0,
        samples=_POSITIVE,
    ),
    _Entry(
        "D10(0)^1",
        lambda v: {
            (0, 1): {1: 1},
            (0, 2): {2: 1},
            (1, 3): {2: 1},
            (3, 3): {0: _I},
            (2, 3): {1: -_I / 2},
        },
        comment="nilpotent odd sector",
    ),
    _Entry(
        "D10(0)^2",
        lambda v: {
            (0, 1): {1: 1},
            (0, 2): {2: 1},
            (1, 3): {2: 1},
            (3, 3): {0: -_I},
            (2, 3): {1: _I / 2},
        },
    ),
    _Entry(
        "(2A11+2A)^2",
        lambda v: {(2, 2): {0: _I}, (3, 3): {1: _I}, (2, 3): {0: _I}},
        comment="nilpotent",
    ),
    _Entry(
        "(2A11+2A)^3_p",
        lambda v: {
            (2, 2): {0: _I},
            (3, 3): {1: _I},
            (2, 3): {0: _I * v["p"], 1: _I * v["p"]},
        },
        params=("p",),
        constraint=lambda v: v["p"] > 0,
        samples=_POSITIVE,
        comment="nilpotent",
    ),
    _Entry(
        "(2A11+2A)^4_p",
        lambda v: {
            (2, 2): {0: _I},
            (3, 3): {1: _I},
            (2, 3): {0: _I * v["p"], 1: -_I * v["p"]},
        },
        params=("p",),
        constraint=lambda v: v["p"] > 0,
        samples=_POSITIVE,
        comment="nilpotent",
    ),
    _Entry("C1_1+A", lambda v: {(0, 1): {1: 1}, (0, 2): {2: 1}, (2, 3): {1: _I}}),
    _Entry(
        "C2_-1+A",
        lambda v: {(0, 2): {2: 1}, (0, 3): {3: -1}, (2, 3): {1: _I}},
        comment="gl(1|1)",
    ),
    _Entry("C3+A", lambda v: {(0, 3): {2: 1}, (3, 3): {1: _I}}, comment="nilpotent"),
    _Entry(
        "C5_0+A",
        lambda v: {
            (0, 2): {3: -1},
            (0, 3): {2: 1},
            (2, 2): {1: _I},
            (3, 3): {1: _I},
        },
    ),
]

# --------------------------------------------------------------------------
# decomposable algebras
# --------------------------------------------------------------------------

_TABLE3 = [
    _Entry("I22", lambda v: {}),
    _Entry("B+B", lambda v: {(0, 2): {2: 1}, (1, 3): {3: 1}}),
    _Entry(
        "C1_p+A",
        lambda v: {(0, 1): {1: 1}, (0, 2): {2: v["p"]}},
        params=("p",),
        constraint=lambda v: v["p"] != 0,
        samples=_grid("p", [1, -1, 2, "1/2", -3]),
    ),
    _Entry(
        "C2_p+A11",
        lambda v: {(0, 2): {2: 1}, (0, 3): {3: v["p"]}},
        params=("p",),
        constraint=lambda v: 0 < abs(v["p"]) <= 1,
        samples=_grid("p", [1, -1, "1/2", "-1/2", "1/3"]),
    ),
    _Entry("L+2A", lambda v: {(0, 1): {1: 1}}),
    _Entry("B+A+A11", lambda v: {(0, 2): {2: 1}}),
    _Entry("C3+A11", lambda v: {(0, 3): {2: 1}}, comment="nilpotent"),
    _Entry("C4+A11", lambda v: {(0, 2): {2: 1}, (0, 3): {2: 1, 3: 1}}),
    _Entry(
        "C5_p+A11",
        lambda v: {(0, 2): {2: v["p"], 3: -1}, (0, 3): {2: 1, 3: v["p"]}},
        params=("p",),
        constraint=lambda v: v["p"] >= 0,
        samples=_grid("p", [0, 1, 2, "1/2", 3]),
    ),
    _Entry("(2A11+2A)^0", lambda v: {(2, 2): {0: _I}}, comment="nilpotent"),
    _Entry(
        "(2A11+2A)^1",
        lambda v: {(2, 2): {0: _I}, (3, 3): {1: _I}},
        comment="nilpotent",
    ),
    _Entry("B+(A11+A)", lambda v: {(0, 2): {2: 1}, (3, 3): {1: _I}}),
    _Entry(
        "(A11+2A)^1+A11",
        lambda v: {(2, 2): {0: _I}, (3, 3): {0: _I}},
        comment="nilpotent",
    ),
    _Entry(
        "(A11+2A)^2+A11",
        lambda v: {(2, 2): {0: _I}, (3, 3): {0: -_I}},
        comment="nilpotent",
    ),
    _Entry(
        "C1_1/2+A",
        lambda v: {
            (0, 1): {1: 1},
            (0, 2): {2: sp.Rational(1, 2)},
            (2, 2): {1: _I},
        },
    ),
]

_CATALOG = {e.label: e for e in _TABLE1 + _TABLE2 + _TABLE3}
_TABLES = {"I": _TABLE1, "II": _TABLE2, "III": _TABLE3}


def catalog_names(table: str | None = None) -> list[str]:
    if table:
        return [e.label for e in _TABLES[table]]
    return list(_CATALOG)


def catalog_entry(name: str) -> _Entry:
    key = normalize_label(name)
    if key not in _CATALOG:
        raise KeyError(
            f"unknown algebra label {name!r}; valid labels: {sorted(_CATALOG)}"
        )
    return _CATALOG[key]


def load(name: str, params: dict | None = None) -> LieSuperalgebra:
    return catalog_entry(name).build(params)


def gl11(convention: str = "standard") -> LieSuperalgebra:
    g = load("C2_-1+A").rename("gl(1|1)")
    return g.to_nonstandard() if convention == "nonstandard" else g


def automorphism_matrix(a, b, c) -> SuperMatrix:
    """The gl(1|1) automorphism family; b and c must be nonzero."""
    a, b, c = (parse_exact(v) for v in (a, b, c))
    rows = [[1, a, 0, 0], [0, b * c, 0, 0], [0, 0, b, 0], [0, 0, 0, c]]
    return SuperMatrix.from_exprs(rows, P22, P22)


# --------------------------------------------------------------------------
# dual-side catalog
# --------------------------------------------------------------------------

_DUAL_LABELS_TRIVIAL = [
    "I22",
    "B+A+A11.i",
    "B+A+A11.ii",
    "C2_1+A11.i",
    "C2_-1+A11.ii",
    "C2_p+A11.i",
    "C2_1/p+A11.ii",
]

_EPS_GRID = _grid("eps", [1, -1])
_P_OPEN = _grid("p", ["1/2", "-1/2", "1/3", "2/3", "-3/4"])

_DUALS = {
    e.label: e
    for e in [
        _Entry("I22", lambda v: {}),
        _Entry("B+A+A11.i", lambda v: {(1, 2): {2: 1}}),
        _Entry("B+A+A11.ii", lambda v: {(1, 3): {3: 1}}),
        _Entry("C2_1+A11.i", lambda v: {(1, 2): {2: 1}, (1, 3): {3: 1}}),
        _Entry("C2_-1+A11.ii", lambda v: {(1, 2): {2: 1}, (1, 3): {3: -1}}),
        _Entry(
            "C2_p+A11.i",
            lambda v: {(1, 2): {2: 1}, (1, 3): {3: v["p"]}},
            params=("p",),
            constraint=lambda v: 0 < abs(v["p"]) < 1,
            samples=_P_OPEN,
        ),
        _Entry(
            "C2_1/p+A11.ii",
            lambda v: {(1, 2): {2: 1}, (1, 3): {3: 1 / v["p"]}},
            params=("p",),
            constraint=lambda v: 0 < abs(v["p"]) < 1,
            samples=_P_OPEN,
        ),
        _Entry(
            "B+(A11+A)_eps.i",
            lambda v: {
                (1, 3): {3: v["eps"]},
                (1, 2): {3: v["eps"] / 2},
                (2, 2): {0: _I * v["eps"]},
            },
            params=("eps",),
            constraint=lambda v: v["eps"] ** 2 == 1,
            samples=_EPS_GRID,
        ),
        _Entry(
            "B+(A11+A)_eps.ii",
            lambda v: {
                (1, 2): {2: v["eps"]},
                (1, 3): {2: -v["eps"] / 2},
                (3, 3): {0: _I * v["eps"]},
            },
            params=("eps",),
            constraint=lambda v: v["eps"] ** 2 == 1,
            samples=_EPS_GRID,
        ),
        _Entry(
            "C3+A_eps.i",
            lambda v: {(1, 3): {2: v["eps"] / 2}, (3, 3): {0: -_I * v["eps"]}},
            params=("eps",),
            constraint=lambda v: v["eps"] ** 2 == 1,
            samples=_EPS_GRID,
        ),
        _Entry(
            "C3+A_eps.ii",
            lambda v: {(1, 2): {3: v["eps"] / 2}, (2, 2): {0: _I * v["eps"]}},
            params=("eps",),
            constraint=lambda v: v["eps"] ** 2 == 1,
            samples=_EPS_GRID,
        ),
        _Entry(
            "C2_-1+A.i",
            lambda v: {
                (1, 2): {3: sp.Rational(1, 2)},
                (1, 3): {2: sp.Rational(1, 2)},
                (2, 2): {0: _I},
                (3, 3): {0: -_I},
            },
        ),
        _Entry(
            "C5_0+A.i",
            lambda v: {
                (1, 2): {3: sp.Rational(1, 2)},
                (1, 3): {2: -sp.Rational(1, 2)},
                (2, 2): {0: _I},
                (3, 3): {0: _I},
            },
        ),
    ]
}

_DUAL_LABELS = list(_DUALS)


def dual_names() -> list[str]:
    return list(_DUAL_LABELS)


def dual_entry(name: str) -> _Entry:
    key = normalize_label(name)
    if key not in _DUALS:
        raise KeyError(
            f"unknown dual label {name!r}; valid labels: {sorted(_DUALS)}"
        )
    return _DUALS[key]


def load_dual(name: str, params: dict | None = None) -> LieSuperalgebra:
    entry = dual_entry(name)
    g = entry.build(params)
    labels = tuple(f"~X{i+1}" for i in range(4))
    return LieSuperalgebra(entry.label, labels, g.parities, g.f, g.convention)


# --------------------------------------------------------------------------
# case families of the dual constraint system and their matrices
# --------------------------------------------------------------------------


def case_family(case: str, alpha=None, beta=None) -> LieSuperalgebra:
    """The four solution families of the dual constraint system, as dual-side
    algebras in the standard convention.  Symbols are used when parameter
    values are omitted."""
    a = parse_exact(alpha) if alpha is not None else _p("alpha")
    b = parse_exact(beta) if beta is not None else _p("beta")
    brackets = {
        "A": {
            (1, 2): {3: a / 2},
            (1, 3): {2: -b / 2},
            (2, 2): {0: _I * a},
            (3, 3): {0: _I * b},
        },
        "B": {(1, 2): {2: a}, (1, 3): {3: b}},
        "C": {(1, 2): {2: a}, (1, 3): {2: -b / 2}, (3, 3): {0: _I * b}},
        "D": {(1, 3): {3: b}, (1, 2): {3: a / 2}, (2, 2): {0: _I * a}},
    }[case.upper()]
    g = make_superalgebra(f"case {case.upper()}", P22, brackets)
    labels = tuple(f"~X{i+1}" for i in range(4))
    return LieSuperalgebra(g.name, labels, g.parities, g.f, g.convention)


def _mat(rows) -> SuperMatrix:
    return SuperMatrix.from_exprs(rows, P22, P22)


def case_isomorphisms(case: str) -> list[dict]:
    """Verification data for mapping the case families onto catalog targets.

    Each item carries callables over a sample dict `v` (values via
    :func:`parse_exact`): `alpha(v)`/`beta(v)` fix the family member,
    `matrix(v)` builds the change-of-basis matrix, `target_params(v)` the
    target's parameters.  `samples` hold rational sample points respecting
    the printed nonvanishing conditions; symbols may be passed instead for
    a symbolic run.
    """
    case = case.upper()
    half = sp.Rational(1, 2)

    def A_C1(v):
        return _mat(
            [
                [v["c11"], v["c12"], 0, 0],
                [v["beta"] * v["c44"] ** 2, 0, 0, 0],
                [0, 0, -half * v["beta"] * v["c12"] * v["c44"], 0],
                [0, 0, v["c43"], v["c44"]],
            ]
        )

    def A_C2(v):
        return _mat(
            [
                [v["c11"], v["c12"], 0, 0],
                [v["alpha"] * v["c43"] ** 2, 0, 0, 0],
                [0, 0, 0, half * v["alpha"] * v["c12"] * v["c43"]],
                [0, 0, v["c43"], v["c44"]],
            ]
        )

    def A_C3(v):
        return _mat(
            [
                [v["c11"], v["c12"], 0, 0],
                [2 * v["beta"] * v["c34"] * v["c44"], 0, 0, 0],
                [0, 0, -half * v["beta"] * v["c12"] * v["c34"], v["c34"]],
                [0, 0, half * v["beta"] * v["c12"] * v["c44"], v["c44"]],
            ]
        )

    def A_C4(v):
        return _mat(
            [
                [v["c11"], v["c12"], 0, 0],
                [v["beta"] * (v["c34"] ** 2 + v["c44"] ** 2), 0, 0, 0],
                [0, 0, -half * v["beta"] * v["c12"] * v["c44"], v["c34"]],
                [0, 0, half * v["beta"] * v["c12"] * v["c34"], v["c44"]],
            ]
        )

    def B_C1(v):
        return _mat(
            [
                [v["c11"], 1 / v["alpha"], 0, 0],
                [v["c21"], 0, 0, 0],
                [0, 0, v["c33"], 0],
                [0, 0, 0, v["c44"]],
            ]
        )

    def B_C2(v):
        return _mat(
            [
                [v["c11"], 1 / v["beta"], 0, 0],
                [v["c21"], 0, 0, 0],
                [0, 0, 0, v["c34"]],
                [0, 0, v["c43"], 0],
            ]
        )

    def B_C3(v):
        return _mat(
            [
                [v["c11"], 1 / v["alpha"], 0, 0],
                [v["c21"], 0, 0, 0],
                [0, 0, v["c33"], v["c34"]],
                [0, 0, v["c43"], v["c44"]],
            ]
        )

    def C_C1(v):
        return _mat(
            [
                [v["c11"], 1 / v["alpha"], 0, 0],
                [2 * v["alpha"] * v["c43"] * v["c44"], 0, 0, 0],
                [0, 0, v["c33"], 0],
                [0, 0, v["c43"], v["c44"]],
            ]
        )

    def D_C1(v):
        return _mat(
            [
                [v["c11"], 1 / v["beta"], 0, 0],
                [-2 * v["beta"] * v["c43"] * v["c44"], 0, 0, 0],
                [0, 0, 0, v["c34"]],
                [0, 0, v["c43"], v["c44"]],
            ]
        )

    zero = lambda v: sp.S.Zero
    items: list[dict] = {
        "A": [
            dict(
                name="A.C1",
                target="C3+A",
                alpha=zero,
                beta=lambda v: v["beta"],
                matrix=A_C1,
                samples=[
                    dict(c11=1, c12=1, c43=0, c44=1, beta=1),
                    dict(c11=2, c12=-1, c43=3, c44="1/2", beta=-2),
                    dict(c11=0, c12="1/3", c43=-1, c44=2, beta="1/2"),
                ],
            ),
            dict(
                name="A.C2",
                target="C3+A",
                alpha=lambda v: v["alpha"],
                beta=zero,
                matrix=A_C2,
                samples=[
                    dict(c11=1, c12=1, c43=1, c44=1, alpha=1),
                    dict(c11=-1, c12=2, c43="1/2", c44=-3, alpha=2),
                ],
            ),
            dict(
                name="A.C3",
                target="C2_-1+A",
                alpha=lambda v: -4 / (v["c12"] ** 2 * v["beta"]),
                beta=lambda v: v["beta"],
                matrix=A_C3,
                samples=[
                    dict(c11=0, c12=1, c34=1, c44=1, beta=1),
                    dict(c11=1, c12=2, c34=-1, c44="1/2", beta=-1),
                ],
            ),
            dict(
                name="A.C4",
                target="C5_0+A",
                alpha=lambda v: 4 / (v["c12"] ** 2 * v["beta"]),
                beta=lambda v: v["beta"],
                matrix=A_C4,
                samples=[
                    dict(c11=0, c12=1, c34=1, c44=1, beta=1),
                    dict(c11=-2, c12=-1, c34=2, c44=1, beta="1/2"),
                ],
            ),
        ],
        "B": [
            dict(
                name="B.C1",
                target="B+A+A11",
                alpha=lambda v: v["alpha"],
                beta=zero,
                matrix=B_C1,
                samples=[
                    dict(c11=1, c21=1, c33=1, c44=1, alpha=1),
                    dict(c11=0, c21=-2, c33="1/2", c44=3, alpha=-1),
                ],
            ),
            dict(
                name="B.C2",
                target="B+A+A11",
                alpha=zero,
                beta=lambda v: v["beta"],
                matrix=B_C2,
                samples=[
                    dict(c11=1, c21=1, c34=1, c43=1, beta=1),
                    dict(c11=2, c21="1/2", c34=-1, c43=2, beta=-2),
                ],
            ),
            dict(
                name="B.C3",
                target="C2_p+A11",
                target_params=lambda v: {"p": sp.S.One},
                alpha=lambda v: v["alpha"],
                beta=lambda v: v["alpha"],
                matrix=B_C3,
                samples=[
                    dict(c11=1, c21=1, c33=1, c34=0, c43=0, c44=1, alpha=1),
                    dict(c11=0, c21=2, c33=1, c34=2, c43=1, c44=3, alpha=-1),
                ],
            ),
            dict(
                name="B.C4",
                target="C2_p+A11",
                target_params=lambda v: {"p": v["p"]},
                alpha=lambda v: v["alpha"],
                beta=lambda v: v["p"] * v["alpha"],
                matrix=B_C1,
                samples=[
                    dict(c11=1, c21=1, c33=1, c44=1, alpha=1, p="1/2"),
                    dict(c11=-1, c21=3, c33=2, c44="1/2", alpha=2, p="-1/2"),
                ],
            ),
            dict(
                name="B.C5",
                target="C2_p+A11",
                target_params=lambda v: {"p": v["p"]},
                alpha=lambda v: v["p"] * v["beta"],
                beta=lambda v: v["beta"],
                matrix=B_C2,
                samples=[
                    dict(c11=1, c21=1, c34=1, c43=1, beta=1, p="1/2"),
                    dict(c11=2, c21=-1, c34="1/3", c43=1, beta=-1, p="1/3"),
                ],
            ),
        ],
        "C": [
            dict(
                name="C.C1",
                target="B+(A11+A)",
                alpha=lambda v: v["alpha"],
                beta=lambda v: 2 * v["alpha"] * v["c43"] / v["c44"],
                matrix=C_C1,
                samples=[
                    dict(c11=0, c33=1, c43=1, c44=1, alpha=1),
                    dict(c11=1, c33=-2, c43="1/2", c44=1, alpha=-1),
                ],
            ),
            dict(
                name="C.viaB1",
                target="B+A+A11",
                alpha=lambda v: v["alpha"],
                beta=zero,
                matrix=B_C1,
                samples=[dict(c11=1, c21=1, c33=1, c44=1, alpha=1)],
            ),
            dict(
                name="C.viaA1",
                target="C3+A",
                alpha=zero,
                beta=lambda v: v["beta"],
                matrix=A_C1,
                samples=[dict(c11=1, c12=1, c43=0, c44=1, beta=1)],
            ),
        ],
        "D": [
            dict(
                name="D.C1",
                target="B+(A11+A)",
                alpha=lambda v: -2 * v["beta"] * v["c44"] / v["c43"],
                beta=lambda v: v["beta"],
                matrix=D_C1,
                samples=[
                    dict(c11=0, c34=1, c43=1, c44=1, beta=1),
                    dict(c11=2, c34=-1, c43=1, c44="1/2", beta=2),
                ],
            ),
            dict(
                name="D.viaB2",
                target="B+A+A11",
                alpha=zero,
                beta=lambda v: v["beta"],
                matrix=B_C2,
                samples=[dict(c11=1, c21=1, c34=1, c43=1, beta=1)],
            ),
            dict(
                name="D.viaA2",
                target="C3+A",
                alpha=lambda v: v["alpha"],
                beta=zero,
                matrix=A_C2,
                samples=[dict(c11=1, c12=1, c43=1, c44=1, alpha=1)],
            ),
        ],
    }[case]
    return items


# --------------------------------------------------------------------------
# JSON algebra schema
# --------------------------------------------------------------------------


def _rat_str(x: sp.Rational) -> str:
    fr = Fraction(int(x.p), int(x.q))
    return f"{fr.numerator}/{fr.denominator}" if fr.denominator != 1 else str(fr.numerator)


def algebra_to_json(g: LieSuperalgebra) -> str:
    """Serialize with exact 'num/den' coefficients; 1-based indices."""
    brackets = []
    for i, j, k, c in g.structure_entries():
        if i > j:
            continue
        c = sp.nsimplify(sp.expand(c))
        re, im = c.as_real_imag()
        if not (re.is_Rational and im.is_Rational):
            raise ValueError(
                "only numerically instantiated algebras serialize; "
                f"coefficient {c} is not Gaussian rational"
            )
        brackets.append(
            {"i": i + 1, "j": j + 1, "k": k + 1, "re": _rat_str(re), "im": _rat_str(im)}
        )
    doc = {
        "name": g.name,
        "basis": [
            {"label": lab, "parity": par} for lab, par in zip(g.labels, g.parities)
        ],
        "brackets": brackets,
        "convention": g.convention,
    }
    return json.dumps(doc, sort_keys=True, indent=2)


def algebra_from_json(text: str) -> LieSuperalgebra:
    doc = json.loads(text)
    parities = tuple(b["parity"] for b in doc["basis"])
    labels = tuple(b["label"] for b in doc["basis"])
    brackets: dict = {}
    for item in doc["brackets"]:
        i, j, k = item["i"] - 1, item["j"] - 1, item["k"] - 1
        coeff = rational(item["re"]) + sp.I * rational(item["im"])
        brackets.setdefault((i, j), {})[k] = coeff
    g = make_superalgebra(
        doc["name"], parities, brackets, labels, doc.get("convention", "standard")
    )
    return g
