"""The integrable system on the superunit disc: graded symplectic form,
Poisson superbracket, the distinguished dynamical variables, supertrace
constants of motion, and involution checks.

Complex chart (z, zb, theta, theta#) with parities (0, 0, 1, 1); the real
chart (X, Y, psi+, psi-) is reached by an exact linear change of
coordinates.  Coefficients are rational functions whose denominators are
powers of B = 1 - z*zb, with the parameter constraint alpha0*beta0 = i*C
applied as a rewrite rule.
"""
from __future__ import annotations

import sympy as sp

from .bialgebra import RMatrix
from .grassmann import GrassmannAlgebra, GrassmannElement
from .scalars import is_zero_expr, param

__all__ = [
    "Z", "ZB", "XR", "YR", "TAU", "EPAR", "NPAR", "CPAR", "ALPHA0", "BETA0",
    "DISC", "REAL_DISC", "BODY",
    "omega_upper", "omega_lower", "omega_contraction_check",
    "poisson_disc", "special_solution", "pde_residuals",
    "rep_matrices", "rep_algebra_check", "qmatrix", "supertrace_rep",
    "motion_invariants", "expected_invariants", "involution_check",
    "to_real", "to_complex", "independence_evidence",
]

Z = sp.Symbol("z")
ZB = sp.Symbol("zb")
XR = sp.Symbol("X", real=True)
YR = sp.Symbol("Y", real=True)
TAU = param("tau")
EPAR = param("e")
NPAR = param("n")
CPAR = param("cC")
ALPHA0 = param("alpha0")
BETA0 = param("beta0")

BODY = 1 - Z * ZB
COORD_PARITY = (0, 0, 1, 1)


def _reduce_ab(expr: sp.Expr) -> sp.Expr:
    """Rewrite alpha0*beta0 -> i*C inside coefficients.  Exact zero testing
    happens at comparison time, so no further normalization here."""
    expr = sp.sympify(expr)
    if expr.has(ALPHA0) and expr.has(BETA0):
        prev = None
        while prev != expr:
            prev = expr
            expr = sp.expand(expr).subs(ALPHA0 * BETA0, sp.I * CPAR)
    return expr


DISC = GrassmannAlgebra(("th", "thh"), simplify=_reduce_ab)
REAL_DISC = GrassmannAlgebra(("psip", "psim"), simplify=_reduce_ab)


def _el(coeff) -> GrassmannElement:
    return DISC.element({(): sp.sympify(coeff)})


def coordinate(name: str) -> GrassmannElement:
    if name == "z":
        return _el(Z)
    if name == "zb":
        return _el(ZB)
    return DISC.gen(name)


_COORDS = ("z", "zb", "th", "thh")


def _deriv(f: GrassmannElement, coord: str, side: str) -> GrassmannElement:
    if coord == "z":
        return f.boson_diff(Z)
    if coord == "zb":
        return f.boson_diff(ZB)
    return f.left_deriv(coord) if side == "l" else f.right_deriv(coord)


def omega_upper():
    """The graded inverse of the symplectic form, rows/cols ordered
    (z, zb, theta, theta#)."""
    th, thh = DISC.gen("th"), DISC.gen("thh")
    pref = 1 / (4 * sp.I * TAU)
    zero = DISC.zero()
    w12 = (_el(2 * BODY) - thh * th) * _el(sp.Rational(1, 2) * BODY)
    w14 = -(_el(Z * BODY) * thh)
    w23 = _el(ZB * BODY) * th
    w34 = _el(2 * BODY) - _el(Z * ZB) * (thh * th)
    rows = [
        [zero, w12, zero, w14],
        [-w12, zero, w23, zero],
        [zero, -w23, zero, w34],
        [-w14, zero, w34, zero],
    ]
    return [[e.scale(pref) for e in row] for row in rows]


def omega_lower():
    """Coefficients of the symplectic two-form, index-lowered.

    Extraction convention (pinned by the exact contraction identity below):
    each printed term contributes twice its displayed coefficient to the
    first-kind graded-antisymmetric tensor, and lowering the index pair
    applies the parity mask (-1)^{p_a (1 + p_b)}.
    """
    th, thh = DISC.gen("th"), DISC.gen("thh")
    one = DISC.one()
    c12 = (_el(-2 * sp.I * TAU) * (one + (thh * th).scale(sp.Rational(1, 2) * (1 + Z * ZB) / BODY))).scale(1 / BODY**2)
    c34 = _el(sp.I * TAU / BODY)
    c14 = th.scale(sp.I * TAU * ZB / BODY**2)
    c32 = thh.scale(-sp.I * TAU * Z / BODY**2)
    first = [[DISC.zero() for _ in range(4)] for _ in range(4)]
    for (a, b), val in {(0, 1): c12, (2, 3): c34, (0, 3): c14, (2, 1): c32}.items():
        val = val.scale(2)
        first[a][b] = first[a][b] + val
        first[b][a] = first[b][a] + val.scale(-((-1) ** (COORD_PARITY[a] * COORD_PARITY[b])))
    return [
        [
            first[a][b].scale((-1) ** (COORD_PARITY[a] * (1 + COORD_PARITY[b])))
            for b in range(4)
        ]
        for a in range(4)
    ]


def omega_contraction_check() -> dict:
    """Exact checks: the printed inverse is graded-antisymmetric and
    contracts with the extracted two-form coefficients to the identity in
    both orders."""
    W = omega_upper()
    L = omega_lower()
    anti = all(
        W[m][n].eq(W[n][m].scale(-((-1) ** (COORD_PARITY[m] * COORD_PARITY[n]))))
        for m in range(4)
        for n in range(4)
    )
    def contract(a_, b_):
        for m in range(4):
            for r in range(4):
                acc = DISC.zero()
                for n in range(4):
                    acc = acc + a_[m][n] * b_[n][r]
                target = DISC.one() if m == r else DISC.zero()
                if not acc.eq(target):
                    return False
        return True
    return {
        "graded_antisymmetric": anti,
        "upper_lower_identity": contract(W, L),
        "lower_upper_identity": contract(L, W),
    }


def _norm(el: GrassmannElement) -> GrassmannElement:
    """Cancel coefficients to their reduced rational form."""
    return el.map_coeff(lambda c: sp.cancel(sp.together(c)))


_OMEGA = None


def _omega():
    global _OMEGA
    if _OMEGA is None:
        _OMEGA = omega_upper()
    return _OMEGA


def poisson_disc(f: GrassmannElement, g: GrassmannElement) -> GrassmannElement:
    """{f, g} = (f d<-/dx^mu) w^{mu nu} (d->g/dx^nu)."""
    W = _omega()
    out = DISC.zero()
    dfs = [_norm(_deriv(f, c, "r")) for c in _COORDS]
    dgs = [_norm(_deriv(g, c, "l")) for c in _COORDS]
    for m in range(4):
        if dfs[m].is_zero():
            continue
        for n in range(4):
            if W[m][n].is_zero() or dgs[n].is_zero():
                continue
            out = out + dfs[m] * W[m][n] * dgs[n]
    return _norm(out)


# ---------------------------------------------------------------------------
# the distinguished solution and its system
# ---------------------------------------------------------------------------


def special_solution():
    """The dynamical variables (S1, S2, S3, S4) in the complex chart."""
    th, thh = DISC.gen("th"), DISC.gen("thh")
    S1 = (thh * th).scale(2 * sp.I * TAU / BODY)
    S2 = (DISC.one().scale(1 - Z * ZB) + (th * thh).scale(sp.Rational(1, 2) * Z * ZB)).scale(
        ALPHA0 * BETA0 / (2 * sp.I * TAU)
    )
    S3 = thh.scale(ALPHA0)
    S4 = th.scale(BETA0)
    return (S1, S2, S3, S4)


def pde_residuals(S) -> dict:
    """Residuals of the defining bracket system {S_i, S_j} = f^k_{ij} S_k in
    the i-dropped convention, all ten homogeneous pairs."""
    from .catalog import gl11

    g = gl11("nonstandard")
    S1, S2, S3, S4 = S
    Ss = [S1, S2, S3, S4]
    out = {}
    for i in range(4):
        for j in range(i, 4):
            rhs = DISC.zero()
            for k in range(4):
                c = g.f[i][j][k]
                if not is_zero_expr(c):
                    rhs = rhs + Ss[k].scale(c)
            out[(i + 1, j + 1)] = poisson_disc(Ss[i], Ss[j]) - rhs
    return out


# ---------------------------------------------------------------------------
# representation, constants of motion
# ---------------------------------------------------------------------------


def rep_matrices():
    """The (2|2)-dimensional representation with parameters e and n;
    row/column parities (0, 0, 1, 1)."""
    e, n = EPAR, NPAR
    X1 = [[n, 0, 0, 0], [0, n, 0, 0], [0, 0, n - 1, 0], [1, 0, -1, n + 1]]
    X2 = [[0, 0, 0, 0], [-sp.I * e, sp.I * e, 0, 0], [0, 0, 0, 0],
          [sp.I * e, 0, -sp.I * e / 2, sp.I * e]]
    X3 = [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [1, -1, 0, 0]]
    X4 = [[0, 0, 0, 0], [-sp.I * e, 0, sp.I * e / 2, -sp.I * e], [0, 0, 0, 0],
          [0, 0, 0, 0]]
    return [
        [[sp.sympify(c) for c in row] for row in M] for M in (X1, X2, X3, X4)
    ]


def rep_algebra_check() -> bool:
    """The representation matrices satisfy the i-dropped relations under the
    graded commutator assigned by the abstract generator parities."""
    from .catalog import gl11

    g = gl11("nonstandard")
    mats = [sp.Matrix(M) for M in rep_matrices()]
    p = (0, 0, 1, 1)
    for i in range(4):
        for j in range(4):
            got = mats[i] * mats[j] - (-1) ** (p[i] * p[j]) * mats[j] * mats[i]
            want = sp.zeros(4, 4)
            for k in range(4):
                want += sp.sympify(g.f[i][j][k]) * mats[k]
            if sp.expand(got - want) != sp.zeros(4, 4):
                return False
    return True


def qmatrix(S, r: RMatrix | dict):
    """Superalgebra-valued observable Q = (-1)^{|j|} S_i r^{ij} X_j in the
    representation; entries are disc functions."""
    coeffs = r.coeffs if isinstance(r, RMatrix) else r
    mats = rep_matrices()
    out = [[DISC.zero() for _ in range(4)] for _ in range(4)]
    for (i, j), c in coeffs.items():
        sign = (-1) ** COORD_PARITY[j]
        factor = S[i].scale(sign * c)
        M = mats[j]
        for a in range(4):
            for b in range(4):
                if M[a][b] != 0:
                    out[a][b] = out[a][b] + factor.scale(M[a][b])
    return out


def supertrace_rep(M) -> GrassmannElement:
    acc = DISC.zero()
    for i in range(4):
        term = M[i][i]
        acc = acc + (term if COORD_PARITY[i] == 0 else -term)
    return acc


def _mat_mul(A, B):
    out = [[DISC.zero() for _ in range(4)] for _ in range(4)]
    for i in range(4):
        for k in range(4):
            if A[i][k].is_zero():
                continue
            for j in range(4):
                if B[k][j].is_zero():
                    continue
                out[i][j] = out[i][j] + A[i][k] * B[k][j]
    return out


def motion_invariants(S, r: RMatrix | dict, kmax: int, chart: str = "real"):
    """I_k = Str[Q^k] for k = 1..kmax, in the requested chart."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    Q = [[_norm(e) for e in row] for row in qmatrix(S, r)]
    out = []
    power = Q
    for _ in range(kmax):
        ik = _norm(supertrace_rep(power))
        out.append(_norm(to_real(ik)) if chart == "real" else ik)
        power = [[_norm(e) for e in row] for row in _mat_mul(power, Q)]
    return out


def expected_invariants():
    """The closed forms of the quadratic and cubic constants of motion in
    the real chart."""
    psip, psim = REAL_DISC.gen("psip"), REAL_DISC.gen("psim")
    rho = XR**2 + YR**2
    Br = 1 - rho
    pp = psip * psim
    i2 = pp.scale(-4 * EPAR * CPAR) + (
        REAL_DISC.one().scale(Br) - pp.scale(2 * rho)
    ).scale(-CPAR**2 / (2 * TAU**2) * Br)
    i3 = pp.scale(3 * EPAR * (2 * NPAR + 1) * CPAR**2 / TAU * Br) + (
        REAL_DISC.one().scale(Br) - pp.scale(3 * rho)
    ).scale(3 * NPAR * CPAR**3 / (4 * TAU**3) * Br**2)
    return i2, i3


def involution_check(invariants) -> dict:
    """Pairwise brackets of the (complex-chart) invariants; all must vanish."""
    out = {}
    for a in range(len(invariants)):
        for b in range(a, len(invariants)):
            out[(a + 1, b + 1)] = poisson_disc(invariants[a], invariants[b])
    return out


# ---------------------------------------------------------------------------
# chart changes
# ---------------------------------------------------------------------------


def to_real(f: GrassmannElement) -> GrassmannElement:
    """Complex chart -> real chart: z = X + iY, theta = psi+ + i psi-,
    theta# = -i psi+ - psi-."""
    psip, psim = REAL_DISC.gen("psip"), REAL_DISC.gen("psim")
    images = {
        "th": psip + psim.scale(sp.I),
        "thh": psip.scale(-sp.I) - psim,
    }
    out = f.convert(images, REAL_DISC)
    return out.subs({Z: XR + sp.I * YR, ZB: XR - sp.I * YR})


def to_complex(f: GrassmannElement) -> GrassmannElement:
    th, thh = DISC.gen("th"), DISC.gen("thh")
    images = {
        "psip": (th + thh.scale(sp.I)).scale(sp.Rational(1, 2)),
        "psim": (th - thh.scale(sp.I)).scale(-sp.I / 2),
    }
    out = f.convert(images, DISC)
    return out.subs({XR: (Z + ZB) / 2, YR: -sp.I * (Z - ZB) / 2})


def independence_evidence(invariants_real) -> dict:
    """Functional-independence evidence: rank of the body Jacobian plus
    linear independence of the soul components.  Reported, never asserted
    as the completeness statement."""
    bodies = [inv.body() for inv in invariants_real]
    jac = sp.Matrix([[sp.diff(b, XR), sp.diff(b, YR)] for b in bodies])
    souls = sp.Matrix([[inv.coeff("psip", "psim")] for inv in invariants_real])
    return {
        "body_jacobian_rank": int(jac.rank()),
        "body_count": len(bodies),
        "soul_components_independent": int(souls.rank()) == len(invariants_real),
    }
