"""Manin supertriples and Drinfeld superdoubles built on gl(1|1).

Two tensors per double are tracked:

* the canonical double assembled from the standard-basis pair, which is a
  genuine Lie superalgebra with an exact ad-invariant pairing (this is what
  every structural invariant is asserted on);
* the presented tensor in the classification-table basis, obtained by the
  recorded presentation recipe (build on the i-dropped pair, then restore
  the imaginary unit on odd-odd brackets).  The golden bracket tables and
  the printed transformation matrices live in this presentation.

For rows whose dual has odd-odd brackets the presented tensor does not
itself close under the graded Jacobi identity (the source tables mix the
two conventions); `DrinfeldDouble.presented_closes` records this per row,
and the canonical double is used wherever an actual algebra is required.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

import sympy as sp

from . import catalog
from .bialgebra import mixed_sji_residual
from .liealg import LieSuperalgebra, _freeze, make_superalgebra, validate_structure
from .scalars import Scalar, is_zero_expr, param, parse_exact
from .supermatrix import SuperMatrix

__all__ = [
    "DrinfeldDouble",
    "build_double",
    "VerifyIso",
    "verify_manin_iso",
    "double_table_rows",
    "double_table_fixture",
    "appendix_maps",
    "section6_matrix",
    "theorem1_partition",
    "double_invariants",
    "sl21_distinction",
]

P8 = (0, 0, 0, 0, 1, 1, 1, 1)
# positions of the algebra generators and the dual generators inside the
# double basis (X1, X2, ~X1, ~X2 | X3, X4, ~X3, ~X4) = T1..T8
G_POS = (0, 1, 4, 5)
D_POS = (2, 3, 6, 7)


def _mixed_double_tensor(g: LieSuperalgebra, gd: LieSuperalgebra):
    """Assemble the 8-dim bracket tensor from a compatible pair."""
    n, p = g.dim, g.parities
    f = [[[sp.S.Zero] * 8 for _ in range(8)] for _ in range(8)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                f[G_POS[i]][G_POS[j]][G_POS[k]] = g.f[i][j][k]
                f[D_POS[i]][D_POS[j]][D_POS[k]] = gd.f[i][j][k]
    for i in range(n):
        for j in range(n):
            comps: dict = {}
            for k in range(n):
                comps[G_POS[k]] = comps.get(G_POS[k], 0) + (-1) ** p[j] * gd.f[j][k][i]
                comps[D_POS[k]] = comps.get(D_POS[k], 0) + (-1) ** p[i] * g.f[k][i][j]
            for pos, c in comps.items():
                c = sp.expand(c)
                f[G_POS[i]][D_POS[j]][pos] = c
                sgn = -1 if not (p[i] and p[j]) else 1
                f[D_POS[j]][G_POS[i]][pos] = sp.expand(sgn * c)
    return LieSuperalgebra(
        f"double({g.name}, {gd.name})",
        tuple(f"T{a+1}" for a in range(8)),
        P8,
        _freeze(f),
        g.convention,
    )


def _pairing_true() -> SuperMatrix:
    """Canonical ad-invariant pairing of the assembled double:
    <X_i, ~X^j> = delta for even i and -delta for odd i (equivalently
    <~X^j, X_i> = delta throughout)."""
    eta = [[sp.S.Zero] * 8 for _ in range(8)]
    for gi, di, v in [(0, 2, 1), (1, 3, 1), (4, 6, -1), (5, 7, -1)]:
        eta[gi][di] = sp.Integer(v)
        eta[di][gi] = sp.Integer(v if P8[gi] == 0 else -v)
    return SuperMatrix.from_exprs(eta, P8, P8)


def _pairing_presented() -> SuperMatrix:
    """Invariant form of the presented tensors, normalized so the odd dual
    pairs have value 1 (the even dual pairs then carry the imaginary unit)."""
    eta = [[sp.S.Zero] * 8 for _ in range(8)]
    for gi, di, v in [(0, 2, sp.I), (1, 3, sp.I), (4, 6, sp.S.One), (5, 7, sp.S.One)]:
        eta[gi][di] = v
        eta[di][gi] = v if P8[gi] == 0 else -v
    return SuperMatrix.from_exprs(eta, P8, P8)


@dataclass
class DrinfeldDouble:
    label: str
    params: dict
    g: LieSuperalgebra
    g_dual: LieSuperalgebra
    algebra: LieSuperalgebra       # canonical double (valid superalgebra)
    presented: LieSuperalgebra     # presentation-basis tensor
    pairing: SuperMatrix
    presented_pairing: SuperMatrix
    presented_closes: bool

    @property
    def dim(self):
        return 8


def pairing_ad_invariant(alg: LieSuperalgebra, eta: SuperMatrix) -> bool:
    """<[Z,U],V> + (-1)^{|Z||U|} <U,[Z,V]> = 0 over all basis triples."""
    n, p = alg.dim, alg.parities
    for z in range(n):
        for u in range(n):
            for v in range(n):
                t = sum(alg.f[z][u][k] * eta[k, v].expr for k in range(n))
                t += (-1) ** (p[z] * p[u]) * sum(
                    alg.f[z][v][k] * eta[u, k].expr for k in range(n)
                )
                if not is_zero_expr(sp.expand(t)):
                    return False
    return True


_DOUBLE_CACHE: dict = {}


def build_double(
    g: LieSuperalgebra | None = None,
    dual: str | LieSuperalgebra = "I22",
    params: dict | None = None,
    check: bool = True,
) -> DrinfeldDouble:
    """Drinfeld superdouble of gl(1|1) with the named dual (or an explicit
    dual algebra).  Refuses incompatible pairs.  Catalog-labelled doubles
    are cached (everything involved is immutable)."""
    params = dict(params or {})
    cache_key = None
    if g is None and isinstance(dual, str):
        cache_key = (
            catalog.normalize_label(dual),
            frozenset((k, str(v)) for k, v in params.items()),
            check,
        )
        cached = _DOUBLE_CACHE.get(cache_key)
        if cached is not None:
            return cached
    if g is None:
        g = catalog.gl11("standard")
    if isinstance(dual, str):
        label = catalog.normalize_label(dual)
        gd = catalog.load_dual(label, params)
    else:
        gd = dual
        label = gd.name
    g_std, gd_std = g.to_standard(), gd.to_standard()
    resid = mixed_sji_residual(g_std, gd_std)
    if resid:
        raise ValueError(
            f"pair (gl(1|1), {label}) fails the mixed compatibility system; "
            f"offending keys {sorted(resid)[:4]}"
        )
    algebra = _mixed_double_tensor(g_std, gd_std)
    presented = _mixed_double_tensor(
        g_std.to_nonstandard(), gd_std.to_nonstandard()
    )._odd_odd_scaled(sp.I, "standard")
    eta = _pairing_true()
    presented_closes = validate_structure(presented, matrix_form=False).ok
    if check:
        rep = validate_structure(algebra, matrix_form=False)
        if not rep.ok:
            raise AssertionError(f"double failed validation: {rep.summary()}")
        if not pairing_ad_invariant(algebra, eta):
            raise AssertionError("canonical pairing is not ad-invariant")
    out = DrinfeldDouble(
        label=label,
        params=params,
        g=g_std,
        g_dual=gd_std,
        algebra=algebra,
        presented=presented,
        pairing=eta,
        presented_pairing=_pairing_presented(),
        presented_closes=presented_closes,
    )
    if cache_key is not None:
        _DOUBLE_CACHE[cache_key] = out
    return out


# ---------------------------------------------------------------------------
# isomorphism verification
# ---------------------------------------------------------------------------


@dataclass
class VerifyIso:
    bracket_ok: bool
    pairing_factor: sp.Expr | None  # lambda with C eta C^T = lambda * eta
    invertible: bool

    @property
    def pairing_ok(self) -> bool:
        return self.pairing_factor is not None and is_zero_expr(
            sp.expand(self.pairing_factor - 1)
        )

    @property
    def ok(self) -> bool:
        return self.bracket_ok and self.invertible and self.pairing_ok


def _bracket_transport_residual(f_src, f_dst, C: sp.Matrix):
    """Rows of C express the destination basis inside the source algebra:
    [C_i, C_j]_src = f_dst^k_{ij} C_k."""
    n = 8
    for i in range(n):
        cols_i = [a for a in range(n) if C[i, a] != 0]
        for j in range(n):
            cols_j = [b for b in range(n) if C[j, b] != 0]
            for e in range(n):
                lhs = sp.S.Zero
                for a in cols_i:
                    for b in cols_j:
                        lhs += C[i, a] * C[j, b] * f_src[a][b][e]
                rhs = sum(f_dst[i][j][k] * C[k, e] for k in range(n))
                if not is_zero_expr(sp.expand(lhs - rhs)):
                    return (i, j, e, sp.expand(lhs - rhs))
    return None


def _pairing_factor(eta: SuperMatrix, C: sp.Matrix):
    base = sp.Matrix([[e.expr for e in row] for row in eta.rows])
    out = sp.expand(C * base * C.T)
    lam = None
    for i in range(8):
        for j in range(8):
            if base[i, j] != 0:
                ratio = sp.cancel(out[i, j] / base[i, j])
                if lam is None:
                    lam = ratio
                elif not is_zero_expr(sp.expand(ratio - lam)):
                    return None
            elif not is_zero_expr(out[i, j]):
                return None
    return sp.cancel(lam) if lam is not None else None


def verify_manin_iso(
    d_from: DrinfeldDouble,
    d_to: DrinfeldDouble,
    C: SuperMatrix | sp.Matrix,
    presentation: str = "presented",
) -> VerifyIso:
    """Check that C carries d_from onto d_to.

    The matrix rows express d_from's generators inside d_to's basis (the
    orientation the printed transformation tables use: the arrow source is
    `d_to`, whose generators build the primed ones).  `presentation`
    selects which tensor/pairing pair the check runs against.
    """
    if isinstance(C, SuperMatrix):
        Cm = sp.Matrix([[e.expr for e in row] for row in C.rows])
    else:
        Cm = sp.Matrix(C)
    if presentation == "presented":
        f_src, f_dst = d_to.presented.f, d_from.presented.f
        eta = d_to.presented_pairing
    else:
        f_src, f_dst = d_to.algebra.f, d_from.algebra.f
        eta = d_to.pairing
    bad = _bracket_transport_residual(f_src, f_dst, Cm)
    lam = _pairing_factor(eta, Cm)
    det = sp.cancel(Cm.det())
    return VerifyIso(bad is None, lam, not is_zero_expr(det))


# ---------------------------------------------------------------------------
# golden bracket tables
# ---------------------------------------------------------------------------


def double_table_fixture() -> dict:
    text = resources.files("superbialg.data").joinpath("double_table.json").read_text()
    return json.loads(text)


def double_table_rows() -> list[str]:
    return list(double_table_fixture()["rows"])


def fixture_tensor(label: str, params: dict | None = None) -> LieSuperalgebra:
    """Presented-basis tensor reconstructed from the golden bracket list."""
    params = {param(k): parse_exact(v) for k, v in (params or {}).items()}
    rowdata = double_table_fixture()["rows"][catalog.normalize_label(label)]
    brackets: dict = {}
    for key, comp in rowdata.items():
        i, j = (int(x) for x in key.strip("[]").split(","))
        i0, j0 = i - 1, j - 1
        comp2 = {int(k) - 1: parse_exact(v).subs(params) for k, v in comp.items()}
        if i0 <= j0:
            tgt = brackets.setdefault((i0, j0), {})
            for k, c in comp2.items():
                tgt[k] = tgt.get(k, 0) + c
        else:
            sgn = -1 if not (P8[i0] and P8[j0]) else 1
            tgt = brackets.setdefault((j0, i0), {})
            for k, c in comp2.items():
                tgt[k] = tgt.get(k, 0) + sgn * c
    return make_superalgebra(label, P8, brackets)


# ---------------------------------------------------------------------------
# the printed transformation families
# ---------------------------------------------------------------------------


def _sy(name):
    return param(name)


def section6_matrix(eps1, eps2, a, b, c, d, e, f) -> sp.Matrix:
    """The explicit supertriple transformation between the two nilpotent-dual
    families, rows = primed generators in terms of the source basis."""
    eps1, eps2, a, b, c, d, e, f = (parse_exact(v) for v in (eps1, eps2, a, b, c, d, e, f))
    C = sp.zeros(8, 8)
    C[0, 0], C[0, 1], C[0, 2] = -1, c, d
    C[1, 1] = a * b
    C[2, 2] = -eps2 * a**2 / eps1
    C[3, 1], C[3, 2], C[3, 3] = e, f, eps2 * a / (eps1 * b)
    C[4, 5] = -a
    C[5, 4] = -b
    C[6, 7] = -eps2 * a / eps1
    C[7, 6] = -eps2 * a**2 / (eps1 * b)
    return C


def appendix_maps() -> list[dict]:
    """The printed isomorphism-matrix families between the supertriples.

    Each item: class tag, source and target row labels with parameter
    callables, a matrix builder over the sample dict, printed nonvanishing
    constraints, and five rational sample points.
    """
    a, b, c, d, e, m, n, r, s = (
        _sy("a"), _sy("b"), _sy("c"), _sy("d"), _sy("e"),
        _sy("m"), _sy("n"), _sy("r"), _sy("s"),
    )
    p = _sy("p")

    def dsd1(v):
        C = sp.zeros(8, 8)
        C[0, 0], C[0, 1], C[0, 2] = 1, v["m"], v["n"]
        C[1, 1], C[1, 2] = v["b"] * v["c"], v["c"] * v["d"] - v["b"] * v["e"]
        C[2, 1], C[2, 2] = v["b"] * v["c"], v["a"] * v["b"] * v["c"] - v["b"] * v["e"] + v["c"] * v["d"]
        C[3, 0], C[3, 1], C[3, 2], C[3, 3] = -1, v["r"], v["s"], v["a"]
        C[4, 4], C[4, 7] = v["b"], v["d"]
        C[5, 5], C[5, 6] = v["c"], v["e"]
        C[6, 6] = v["a"] * v["c"]
        C[7, 7] = v["a"] * v["b"]
        return C

    def dsd2_1(v):
        C = sp.zeros(8, 8)
        C[0, 0], C[0, 1], C[0, 2], C[0, 3] = 1, v["m"], v["n"], 2
        C[1, 1], C[1, 2] = v["a"] * v["d"], -v["a"] * v["d"] + v["b"] * v["c"]
        C[2, 2] = -v["b"] * v["c"]
        C[3, 1], C[3, 2], C[3, 3] = v["r"], v["s"], 1
        C[4, 6], C[4, 7] = v["a"], v["b"]
        C[5, 4], C[5, 5], C[5, 6], C[5, 7] = v["d"], v["c"], -v["c"], -v["d"]
        C[6, 5], C[6, 6] = v["c"], -v["c"]
        C[7, 6] = v["a"]
        return C

    def dsd2_2(v):
        C = sp.zeros(8, 8)
        C[0, 0], C[0, 1], C[0, 2] = 1, v["m"], v["n"]
        C[1, 1], C[1, 2] = v["a"] * (v["b"] + v["d"]), v["b"] * v["c"] - v["a"] * v["d"]
        C[2, 1], C[2, 2] = v["a"] * (v["b"] + v["d"]), -2 * v["a"] * v["b"] - v["b"] * v["c"] - v["a"] * v["d"]
        C[3, 0], C[3, 1], C[3, 2], C[3, 3] = -1, v["r"], v["s"], -2
        C[4, 4], C[4, 7] = v["a"], v["c"]
        C[5, 5], C[5, 6] = v["b"], v["d"]
        C[6, 5], C[6, 6] = 2 * v["b"], -2 * v["b"]
        C[7, 4], C[7, 7] = 2 * v["a"], -2 * v["a"]
        return C

    def dsd2_3(v):
        C = sp.zeros(8, 8)
        C[0, 0], C[0, 1], C[0, 2], C[0, 3] = 1, v["m"], v["n"], 2
        C[1, 1], C[1, 2] = v["a"] * v["d"], -v["a"] * v["d"] + v["b"] * v["c"]
        C[2, 1], C[2, 2] = v["a"] * v["d"], -v["p"] * v["b"] * v["c"] - v["a"] * v["d"]
        C[3, 0], C[3, 1], C[3, 2], C[3, 3] = -1, v["r"], v["s"], v["p"] - 1
        C[4, 6], C[4, 7] = v["d"], v["c"]
        C[5, 4], C[5, 5], C[5, 6], C[5, 7] = v["a"], v["b"], -v["b"], -v["a"]
        C[6, 5], C[6, 6] = (1 + v["p"]) * v["b"], -(1 + v["p"]) * v["b"]
        C[7, 6] = (1 + v["p"]) * v["d"]
        return C

    def dsd2_4(v):
        C = sp.zeros(8, 8)
        C[0, 0], C[0, 1], C[0, 2], C[0, 3] = 1, v["m"], v["n"], 2
        C[1, 1], C[1, 2] = v["a"] * v["c"], -v["a"] * v["c"] - v["b"] * v["d"]
        C[2, 1], C[2, 2] = v["a"] * v["c"], v["b"] * v["d"] / v["p"] - v["a"] * v["c"]
        C[3, 0], C[3, 1], C[3, 2], C[3, 3] = -1, v["r"], v["s"], 1 / v["p"] - 1
        C[4, 6], C[4, 7] = v["a"], v["b"]
        C[5, 4], C[5, 5], C[5, 6], C[5, 7] = v["c"], -v["d"], v["d"], -v["c"]
        C[6, 5], C[6, 6] = -(1 + v["p"]) * v["d"] / v["p"], (1 + v["p"]) * v["d"] / v["p"]
        C[7, 6] = (1 + v["p"]) * v["a"] / v["p"]
        return C

    def dsd3_1(v):
        C = sp.zeros(8, 8)
        C[0, 0], C[0, 1], C[0, 2] = 1, v["m"], v["n"]
        C[1, 1] = v["a"] ** 2
        C[2, 2] = -v["a"] ** 2
        C[3, 1], C[3, 2], C[3, 3] = v["b"], v["c"], -1
        C[4, 4] = v["a"]
        C[5, 5] = v["a"]
        C[6, 6] = -v["a"]
        C[7, 7] = -v["a"]
        return C

    def dsd3_2(v):
        ratio = v["eps2"] / v["eps1"]
        C = sp.zeros(8, 8)
        C[0, 0], C[0, 1], C[0, 2] = -1, v["m"], v["n"]
        C[1, 1] = -v["a"] ** 2
        C[2, 2] = ratio * v["a"] ** 2
        C[3, 1], C[3, 2], C[3, 3] = v["b"], v["c"], ratio
        C[4, 5] = -v["a"]
        C[5, 4] = v["a"]
        C[6, 7] = ratio * v["a"]
        C[7, 6] = -ratio * v["a"]
        return C

    def dsd4_1(v):
        C = sp.zeros(8, 8)
        C[0, 0], C[0, 1], C[0, 2] = 1, v["m"], v["n"]
        C[1, 1] = -v["a"] * v["b"] ** 2
        C[2, 2] = -(v["a"] ** 2) * v["b"] ** 2
        C[3, 1], C[3, 2], C[3, 3] = v["c"], v["d"], v["a"]
        C[4, 4] = v["b"]
        C[5, 5] = -v["a"] * v["b"]
        C[6, 6] = -(v["a"] ** 2) * v["b"]
        C[7, 7] = v["a"] * v["b"]
        return C

    def dsd4_2(v):
        return section6_matrix(
            v["eps1"], v["eps2"], v["a"], v["b"], v["c"], v["d"], v["e"], v["f"]
        )

    def grid(**fixed):
        base = [
            dict(a=1, b=1, c=1, d=1, e=0, f=0, m=0, n=0, r=0, s=0),
            dict(a=2, b=-1, c=1, d="1/2", e=1, f=2, m=1, n=-1, r=2, s=0),
            dict(a="1/2", b=2, c=-1, d=1, e=-2, f=1, m=0, n=2, r=-1, s=1),
            dict(a=-1, b="1/3", c=2, d=-1, e=0, f=-1, m=3, n=0, r=0, s=-2),
            dict(a=3, b=1, c="-1/2", d=2, e=1, f=0, m=-1, n=1, r=1, s=1),
        ]
        return [dict(s_, **fixed) for s_ in base]

    def pf_dsd1(v):
        # pairing-preserving subfamily: a = e/(c^2 d), b = c d / e, m = -r,
        # n = 0, s = e r / (c^2 d); c, d, e nonzero
        w = dict(v)
        ee = v["e"] if not is_zero_expr(sp.sympify(v["e"])) else sp.S.One
        w["e"] = ee
        w["a"] = ee / (v["c"] ** 2 * v["d"])
        w["b"] = v["c"] * v["d"] / ee
        w["m"] = -v["r"]
        w["n"] = sp.S.Zero
        w["s"] = ee * v["r"] / (v["c"] ** 2 * v["d"])
        return w

    def pf_dsd2_1(v):
        w = dict(v)
        w["a"] = 1 / v["d"]
        w["b"] = -1 / v["c"]
        w["m"] = -v["s"]
        w["n"] = 2 * v["s"]
        w["r"] = sp.S.Zero
        return w

    def pf_dsd2_2(v):
        w = dict(v)
        w["b"] = -v["d"] - 1 / (2 * v["a"])
        w["c"] = -2 * v["a"] ** 2 * v["d"] / (2 * v["a"] * v["d"] + 1)
        w["m"] = v["s"] / 2
        w["n"] = sp.S.Zero
        w["r"] = -v["s"] / 2
        return w

    def pf_dsd2_3(v):
        w = dict(v)
        w["a"] = 1 / (v["d"] * (v["p"] + 1))
        w["b"] = -1 / (v["c"] * (v["p"] + 1))
        w["m"] = -v["s"] / (v["p"] - 1)
        w["n"] = 2 * v["s"] / (v["p"] - 1)
        w["r"] = v["s"] / (v["p"] - 1)
        return w

    def pf_dsd2_4(v):
        w = dict(v)
        w["a"] = v["p"] / (v["c"] * (v["p"] + 1))
        w["b"] = v["p"] / (v["d"] * (v["p"] + 1))
        w["m"] = v["p"] * v["s"] / (v["p"] - 1)
        w["n"] = -2 * v["p"] * v["s"] / (v["p"] - 1)
        w["r"] = -v["p"] * v["s"] / (v["p"] - 1)
        return w

    def pf_dsd3_1(v):
        # no real member: the subfamily needs a = +-i (recorded; complex)
        w = dict(v)
        w["a"] = sp.I
        w["b"] = sp.S.Zero
        w["c"] = v["m"]
        w["n"] = sp.S.Zero
        return w

    def pf_dsd3_2(v):
        # real exactly when eps2 = -eps1
        w = dict(v)
        w["a"] = sp.sqrt(-v["eps1"] / v["eps2"])
        w["b"] = sp.S.Zero
        w["c"] = v["eps2"] * v["m"] / v["eps1"]
        w["n"] = sp.S.Zero
        return w

    def pf_dsd4_1(v):
        w = dict(v)
        w["a"] = sp.I / v["b"]
        w["c"] = sp.S.Zero
        w["d"] = -sp.I * v["m"] / v["b"]
        w["n"] = sp.S.Zero
        return w

    def pf_dsd4_2(v):
        # real exactly when eps1 = eps2
        w = dict(v)
        root = sp.sqrt(v["eps1"] / v["eps2"])
        w["a"] = root
        w["c"] = v["b"] * v["f"] * root
        w["d"] = sp.S.Zero
        w["e"] = sp.S.Zero
        return w

    return [
        dict(
            tag="Dsd1",
            source="C2_-1+A11.ii", source_params=lambda v: {},
            target="I22", target_params=lambda v: {},
            matrix=dsd1, samples=grid(), pairing_subfamily=pf_dsd1,
            pairing_real=True,
        ),
        dict(
            tag="Dsd2",
            source="B+A+A11.ii", source_params=lambda v: {},
            target="B+A+A11.i", target_params=lambda v: {},
            matrix=dsd2_1, samples=grid(), pairing_subfamily=pf_dsd2_1,
            pairing_real=True,
        ),
        dict(
            tag="Dsd2",
            source="C2_1+A11.i", source_params=lambda v: {},
            target="B+A+A11.i", target_params=lambda v: {},
            matrix=dsd2_2,
            samples=[
                s_ for s_ in grid()
                if parse_exact(s_["a"]) + parse_exact(s_["c"]) != 0
                and parse_exact(s_["b"]) + parse_exact(s_["d"]) != 0
            ],
            pairing_subfamily=pf_dsd2_2,
            pairing_real=True,
        ),
        dict(
            tag="Dsd2",
            source="C2_p+A11.i", source_params=lambda v: {"p": v["p"]},
            target="B+A+A11.i", target_params=lambda v: {},
            matrix=dsd2_3, samples=grid(p="1/2") + grid(p="-1/2")[:2],
            pairing_subfamily=pf_dsd2_3,
            pairing_real=True,
        ),
        dict(
            tag="Dsd2",
            source="C2_1/p+A11.ii", source_params=lambda v: {"p": v["p"]},
            target="B+A+A11.i", target_params=lambda v: {},
            matrix=dsd2_4, samples=grid(p="1/2") + grid(p="1/3")[:2],
            pairing_subfamily=pf_dsd2_4,
            pairing_real=True,
        ),
        dict(
            tag="Dsd3",
            source="B+(A11+A)_eps.i", source_params=lambda v: {"eps": -1},
            target="B+(A11+A)_eps.i", target_params=lambda v: {"eps": 1},
            matrix=dsd3_1, samples=grid(), pairing_subfamily=pf_dsd3_1,
            pairing_real=False,
        ),
        dict(
            tag="Dsd3",
            source="B+(A11+A)_eps.ii", source_params=lambda v: {"eps": v["eps2"]},
            target="B+(A11+A)_eps.i", target_params=lambda v: {"eps": v["eps1"]},
            matrix=dsd3_2,
            samples=grid(eps1=1, eps2=1)[:2] + grid(eps1=1, eps2=-1)[:2]
            + grid(eps1=-1, eps2=1)[:1] + grid(eps1=-1, eps2=-1)[:1],
            pairing_subfamily=pf_dsd3_2,
            pairing_real="eps2 = -eps1",
        ),
        dict(
            tag="Dsd4",
            source="C3+A_eps.i", source_params=lambda v: {"eps": -1},
            target="C3+A_eps.i", target_params=lambda v: {"eps": 1},
            matrix=dsd4_1, samples=grid(), pairing_subfamily=pf_dsd4_1,
            pairing_real=False,
        ),
        dict(
            tag="Dsd4",
            source="C3+A_eps.ii", source_params=lambda v: {"eps": v["eps2"]},
            target="C3+A_eps.i", target_params=lambda v: {"eps": v["eps1"]},
            matrix=dsd4_2,
            samples=grid(eps1=1, eps2=1)[:2] + grid(eps1=1, eps2=-1)[:2]
            + grid(eps1=-1, eps2=1)[:1] + grid(eps1=-1, eps2=-1)[:1],
            pairing_subfamily=pf_dsd4_2,
            pairing_real="eps1 = eps2",
        ),
    ]


def true_double_witnesses() -> list[dict]:
    """Frozen pairing-preserving isomorphism witnesses between the canonical
    doubles inside each class (recovered by exact solving on the printed
    zero-patterns; real witnesses exist exactly for the recorded
    epsilon-patterns)."""

    def mat(entries):
        C = sp.zeros(8, 8)
        for (i, j), val in entries.items():
            C[i, j] = parse_exact(val)
        return C

    return [
        dict(
            klass="Dsd4",
            from_=("C3+A_eps.i", {"eps": 1}),
            to=("C3+A_eps.ii", {"eps": 1}),
            matrix=mat({(0, 0): -1, (1, 1): -1, (2, 2): -1, (3, 3): -1,
                        (4, 5): 1, (5, 4): -1, (6, 7): 1, (7, 6): -1}),
            real=True,
        ),
        dict(
            klass="Dsd4",
            from_=("C3+A_eps.i", {"eps": -1}),
            to=("C3+A_eps.ii", {"eps": -1}),
            matrix=mat({(0, 0): -1, (1, 1): -1, (2, 2): -1, (3, 3): -1,
                        (4, 5): 1, (5, 4): -1, (6, 7): 1, (7, 6): -1}),
            real=True,
        ),
        dict(
            klass="Dsd3",
            from_=("B+(A11+A)_eps.i", {"eps": 1}),
            to=("B+(A11+A)_eps.ii", {"eps": -1}),
            matrix=mat({(0, 0): -1, (1, 1): -1, (2, 2): -1, (3, 3): -1,
                        (4, 5): -1, (5, 4): 1, (6, 7): -1, (7, 6): 1}),
            real=True,
        ),
        dict(
            klass="Dsd3",
            from_=("B+(A11+A)_eps.i", {"eps": -1}),
            to=("B+(A11+A)_eps.ii", {"eps": 1}),
            matrix=mat({(0, 0): -1, (1, 1): -1, (2, 2): -1, (3, 3): -1,
                        (4, 5): -1, (5, 4): 1, (6, 7): -1, (7, 6): 1}),
            real=True,
        ),
        dict(
            klass="Dsd1",
            from_=("C2_-1+A11.ii", {}),
            to=("I22", {}),
            matrix=mat({(0, 0): 1, (0, 1): -1, (1, 1): 1, (2, 1): 1, (2, 2): 1,
                        (3, 0): -1, (3, 1): 1, (3, 2): 1, (3, 3): 1,
                        (4, 4): 1, (4, 7): 1, (5, 5): 1, (5, 6): 1,
                        (6, 6): 1, (7, 7): 1}),
            real=True,
        ),
    ]


# ---------------------------------------------------------------------------
# invariants and the partition report
# ---------------------------------------------------------------------------


def _span_dim(vectors) -> int:
    if not vectors:
        return 0
    m = sp.Matrix(vectors)
    return m.rank()


def double_invariants(d: DrinfeldDouble) -> dict:
    """Basis-independent invariants of the canonical double."""
    alg = d.algebra
    n = alg.dim
    brackets = []
    even_brackets = []
    for i in range(n):
        for j in range(n):
            vec = [alg.f[i][j][k] for k in range(n)]
            if any(not is_zero_expr(c) for c in vec):
                brackets.append(vec)
                if P8[i] == P8[j] == 0:
                    even_brackets.append(vec)
    derived_dim = _span_dim(brackets)
    even_derived_dim = _span_dim(even_brackets)
    # center
    rows = []
    for i in range(n):
        rows.append([alg.f[i][j][k] for j in range(n) for k in range(n)])
    center_dim = n - sp.Matrix(rows).rank()
    # Killing form rank: K(x, y) = Str(ad x ad y)
    from .liealg import adjoint

    ad = [adjoint(alg, i) for i in range(n)]
    K = sp.zeros(n, n)
    for i in range(n):
        for j in range(n):
            K[i, j] = (ad[i] @ ad[j]).supertrace().expr
    even = [i for i in range(n) if P8[i] == 0]
    Keven = K[even, even]
    pos = neg = 0
    for value, mult in Keven.eigenvals().items():
        value = sp.nsimplify(value)
        if value.is_positive:
            pos += mult
        elif value.is_negative:
            neg += mult
    return {
        "derived_dim": int(derived_dim),
        "even_derived_dim": int(even_derived_dim),
        "center_dim": int(center_dim),
        "killing_rank": int(K.rank()),
        "killing_even_signature": (int(pos), int(neg)),
    }


def sl21_distinction(d: DrinfeldDouble) -> dict:
    """Evidence that the double is not the simple (2|2)-type superalgebra:
    a simple algebra equals its own derived algebra (dimension 8 here)."""
    inv = double_invariants(d)
    return {
        "derived_dim": inv["derived_dim"],
        "simple_would_need": 8,
        "distinct": inv["derived_dim"] < 8,
    }


THEOREM1_CLASSES = {
    "Dsd1": ["I22", "C2_-1+A11.ii"],
    "Dsd2^p": ["B+A+A11.i", "B+A+A11.ii", "C2_1+A11.i", "C2_p+A11.i", "C2_1/p+A11.ii"],
    "Dsd3^eps1,eps2": ["B+(A11+A)_eps.i", "B+(A11+A)_eps.ii"],
    "Dsd4^eps1,eps2": ["C3+A_eps.i", "C3+A_eps.ii"],
    "Dsd5": ["C2_-1+A.i"],
    "Dsd6": ["C5_0+A.i"],
}


def theorem1_partition(p_value="1/2") -> dict:
    """Verify the six-class partition: every printed transformation family
    checks out as a bracket isomorphism of the presented tensors (with its
    pairing transported up to the recorded scalar), classes are listed with
    their members, and cross-class separation evidence (invariants of the
    canonical doubles) is attached."""
    p_value = parse_exact(p_value)
    report: dict = {"classes": {}, "witnesses": [], "separation": {}}
    for tag, members in THEOREM1_CLASSES.items():
        report["classes"][tag] = {"members": members, "singleton": len(members) == 1}
    for item in appendix_maps():
        sample = item["samples"][0]
        v = {k: parse_exact(x) for k, x in sample.items()}
        v.setdefault("p", p_value)
        vp = item["pairing_subfamily"](v)
        src = build_double(dual=item["source"], params=item["source_params"](v))
        dst = build_double(dual=item["target"], params=item["target_params"](v))
        res = verify_manin_iso(src, dst, item["matrix"](v))
        resp = verify_manin_iso(src, dst, item["matrix"](vp))
        report["witnesses"].append(
            {
                "class": item["tag"],
                "from": src.label,
                "from_params": {k: str(val) for k, val in src.params.items()},
                "to": dst.label,
                "to_params": {k: str(val) for k, val in dst.params.items()},
                "bracket_isomorphism": res.bracket_ok,
                "invertible": res.invertible,
                "pairing_on_subfamily": resp.pairing_ok,
                "pairing_subfamily_real": item["pairing_real"],
            }
        )
    for w in true_double_witnesses():
        d_from = build_double(dual=w["from_"][0], params=w["from_"][1])
        d_to = build_double(dual=w["to"][0], params=w["to"][1])
        res = verify_manin_iso(d_from, d_to, w["matrix"], presentation="canonical")
        report["witnesses"].append(
            {
                "class": w["klass"],
                "from": d_from.label,
                "from_params": {k: str(val) for k, val in d_from.params.items()},
                "to": d_to.label,
                "to_params": {k: str(val) for k, val in d_to.params.items()},
                "bracket_isomorphism": res.bracket_ok,
                "invertible": res.invertible,
                "pairing_on_subfamily": res.pairing_ok,
                "pairing_subfamily_real": w["real"],
                "canonical_basis": True,
            }
        )
    reps = {
        "Dsd1": ("I22", {}),
        "Dsd2^p": ("C2_p+A11.i", {"p": p_value}),
        "Dsd3^eps1,eps2": ("B+(A11+A)_eps.i", {"eps": 1}),
        "Dsd4^eps1,eps2": ("C3+A_eps.i", {"eps": 1}),
        "Dsd5": ("C2_-1+A.i", {}),
        "Dsd6": ("C5_0+A.i", {}),
    }
    vectors = {}
    for tag, (label, params) in reps.items():
        d = build_double(dual=label, params=params)
        inv = double_invariants(d)
        inv["not_simple_type"] = sl21_distinction(d)["distinct"]
        vectors[tag] = inv
    report["separation"]["invariants"] = vectors
    pairs = []
    tags = list(reps)
    doubles = {t: build_double(dual=reps[t][0], params=reps[t][1]) for t in tags}
    for i, t1 in enumerate(tags):
        for t2 in tags[i + 1 :]:
            separated = vectors[t1] != vectors[t2]
            entry = {"pair": [t1, t2], "separated_by_invariants": separated}
            if not separated:
                entry["witness_search"] = (
                    "no invertible pairing-preserving witness in the bounded "
                    "pattern (evidence, not proof)"
                    if not _bounded_witness_exists(doubles[t1], doubles[t2])
                    else "witness found"
                )
            pairs.append(entry)
    report["separation"]["pairwise"] = pairs
    report["separation"]["note"] = (
        "invariant agreement is evidence only; pairs not separated here are "
        "probed by a bounded witness search and never claimed settled"
    )
    return report


_SEARCH_SLOTS = [
    (0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 1), (2, 2),
    (3, 0), (3, 1), (3, 2), (3, 3),
    (4, 4), (4, 5), (5, 4), (5, 5), (6, 6), (6, 7), (7, 6), (7, 7),
]


def _bounded_witness_exists(d1: DrinfeldDouble, d2: DrinfeldDouble) -> bool:
    """Exact solve for a pairing-preserving isomorphism of the canonical
    doubles over a fixed zero-pattern wide enough to recover every
    intra-class witness.  Absence is evidence, not proof."""
    us = sp.symbols(f"u0:{len(_SEARCH_SLOTS)}")
    C = sp.zeros(8, 8)
    for (i, j), u in zip(_SEARCH_SLOTS, us):
        C[i, j] = u
    f_src, f_dst = d2.algebra.f, d1.algebra.f
    eqs = []
    for i in range(8):
        for j in range(8):
            for e in range(8):
                lhs = sum(
                    C[i, a] * C[j, b] * f_src[a][b][e]
                    for a in range(8)
                    for b in range(8)
                    if C[i, a] != 0 and C[j, b] != 0
                )
                rhs = sum(f_dst[i][j][k] * C[k, e] for k in range(8) if f_dst[i][j][k] != 0)
                q = sp.expand(lhs - rhs)
                if q != 0:
                    eqs.append(q)
    base = sp.Matrix([[e.expr for e in row] for row in d2.pairing.rows])
    pair = sp.expand(C * base * C.T - base)
    eqs += [pair[i, j] for i in range(8) for j in range(8) if pair[i, j] != 0]
    for sol in sp.solve(eqs, us, dict=True):
        Cn = C.subs(sol)
        det = sp.cancel(Cn.det())
        if det != 0 or det.free_symbols:
            return True
    return False
