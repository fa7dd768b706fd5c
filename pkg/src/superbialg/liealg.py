"""Lie superalgebras as graded structure-constant tensors.

Constants are stored as f[i][j][k], the coefficient of the k-th generator in
the graded bracket of generators i and j.  The same container doubles as the
dual-side tensor (upper index pair (i, j), lower k) wherever a dual algebra
appears; contractions are then written out explicitly by the callers.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import sympy as sp

from .scalars import Scalar, is_zero_expr, parse_exact
from .supermatrix import SuperMatrix

__all__ = [
    "LieSuperalgebra",
    "ValidationReport",
    "make_superalgebra",
    "validate_structure",
    "adjoint",
    "ymatrix",
    "transport_structure",
    "is_automorphism",
    "is_isomorphism",
]


@dataclass(frozen=True)
class LieSuperalgebra:
    name: str
    labels: tuple[str, ...]
    parities: tuple[int, ...]
    f: tuple  # f[i][j][k] as nested tuples of sympy expressions
    convention: str = "standard"

    @property
    def dim(self) -> int:
        return len(self.parities)

    def grade(self, i: int) -> int:
        return self.parities[i]

    def bracket(self, i: int, j: int) -> tuple:
        """Coefficient vector of [X_i, X_j]."""
        return self.f[i][j]

    def structure_entries(self):
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    c = self.f[i][j][k]
                    if not is_zero_expr(c):
                        yield i, j, k, c

    def is_abelian(self) -> bool:
        return next(self.structure_entries(), None) is None

    def rename(self, name: str) -> "LieSuperalgebra":
        return LieSuperalgebra(name, self.labels, self.parities, self.f, self.convention)

    def to_nonstandard(self) -> "LieSuperalgebra":
        """Drop the imaginary unit from odd-odd brackets (multiply by -i)."""
        if self.convention == "nonstandard":
            return self
        return self._odd_odd_scaled(-sp.I, "nonstandard")

    def to_standard(self) -> "LieSuperalgebra":
        if self.convention == "standard":
            return self
        return self._odd_odd_scaled(sp.I, "standard")

    def _odd_odd_scaled(self, factor, convention: str) -> "LieSuperalgebra":
        n = self.dim
        f = [
            [
                [
                    sp.expand(factor * self.f[i][j][k])
                    if self.parities[i] and self.parities[j]
                    else self.f[i][j][k]
                    for k in range(n)
                ]
                for j in range(n)
            ]
            for i in range(n)
        ]
        return LieSuperalgebra(
            self.name, self.labels, self.parities, _freeze(f), convention
        )

    def subs(self, mapping) -> "LieSuperalgebra":
        n = self.dim
        f = [
            [
                [sp.sympify(self.f[i][j][k]).subs(mapping) for k in range(n)]
                for j in range(n)
            ]
            for i in range(n)
        ]
        return LieSuperalgebra(self.name, self.labels, self.parities, _freeze(f), self.convention)

    def eq_constants(self, other: "LieSuperalgebra") -> bool:
        if self.dim != other.dim or self.parities != other.parities:
            return False
        return all(
            is_zero_expr(self.f[i][j][k] - other.f[i][j][k])
            for i in range(self.dim)
            for j in range(self.dim)
            for k in range(self.dim)
        )


def _freeze(f) -> tuple:
    return tuple(tuple(tuple(sp.sympify(c) for c in row) for row in plane) for plane in f)


def make_superalgebra(
    name: str,
    parities,
    brackets: dict,
    labels=None,
    convention: str = "standard",
) -> LieSuperalgebra:
    """Build an algebra from one-sided bracket data.

    `brackets` maps (i, j) with i <= j (0-based) to {k: coeff}; the graded
    antisymmetric partner is filled in automatically.
    """
    parities = tuple(int(p) % 2 for p in parities)
    n = len(parities)
    if labels is None:
        labels = tuple(f"X{i+1}" for i in range(n))
    f = [[[sp.S.Zero] * n for _ in range(n)] for _ in range(n)]
    for (i, j), comps in brackets.items():
        if i > j:
            raise ValueError("bracket keys must have i <= j")
        for k, coeff in comps.items():
            coeff = parse_exact(coeff)
            f[i][j][k] = sp.expand(f[i][j][k] + coeff)
            if i != j:
                sign = -1 if not (parities[i] and parities[j]) else 1
                f[j][i][k] = sp.expand(f[j][i][k] + sign * coeff)
    return LieSuperalgebra(name, tuple(labels), parities, _freeze(f), convention)


# ---------------------------------------------------------------------------
# adjoint matrices
# ---------------------------------------------------------------------------


def adjoint(g: LieSuperalgebra, i: int) -> SuperMatrix:
    """Adjoint matrix of the i-th generator: entry (j, k) = -f[i][j][k]."""
    if not 0 <= i < g.dim:
        raise IndexError(f"generator index {i} out of range")
    rows = [[Scalar(-g.f[i][j][k]) for k in range(g.dim)] for j in range(g.dim)]
    return SuperMatrix(rows, g.parities, g.parities)


def ymatrix(g: LieSuperalgebra, i: int) -> SuperMatrix:
    """Companion matrix with the generator index in the output slot:
    entry (j, k) = -f[j][k][i]."""
    if not 0 <= i < g.dim:
        raise IndexError(f"generator index {i} out of range")
    rows = [[Scalar(-g.f[j][k][i]) for k in range(g.dim)] for j in range(g.dim)]
    return SuperMatrix(rows, g.parities, g.parities)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass
class ValidationReport:
    antisymmetry: list = field(default_factory=list)
    grading: list = field(default_factory=list)
    jacobi: dict = field(default_factory=dict)
    jacobi_matrix: dict = field(default_factory=dict)
    crosscheck_ok: bool = True

    @property
    def ok(self) -> bool:
        return (
            not self.antisymmetry
            and not self.grading
            and not self.jacobi
            and not self.jacobi_matrix
            and self.crosscheck_ok
        )

    def summary(self) -> dict:
        return {
            "antisymmetry_violations": len(self.antisymmetry),
            "grading_violations": len(self.grading),
            "jacobi_violations": len(self.jacobi),
            "matrix_form_violations": len(self.jacobi_matrix),
            "forms_agree": self.crosscheck_ok,
            "ok": self.ok,
        }


def jacobi_residual_index(g: LieSuperalgebra) -> dict:
    """Index-form graded Jacobi residual, keyed by (i, j, k, m).

    Accumulated sparsely over the nonzero structure entries; zero tensors
    cost nothing.
    """
    n, p, f = g.dim, g.parities, g.f
    nonzero = [
        (a, b, l, f[a][b][l])
        for a in range(n)
        for b in range(n)
        for l in range(n)
        if not (f[a][b][l] is sp.S.Zero or f[a][b][l] == 0)
    ]
    acc: dict = {}

    def bump(key, val):
        acc[key] = acc.get(key, sp.S.Zero) + val

    # term 1: (-1)^{p_i (p_j+p_k)} f[j][l][m] f[k][i][l]
    for k_, i_, l_, c1 in nonzero:  # c1 = f[k][i][l]
        for j_ in range(n):
            row = f[j_][l_]
            for m_ in range(n):
                c2 = row[m_]
                if c2 is sp.S.Zero or c2 == 0:
                    continue
                sgn = (-1) ** (p[i_] * (p[j_] + p[k_]))
                bump((i_, j_, k_, m_), sgn * c2 * c1)
    # term 2: f[i][l][m] f[j][k][l]
    for j_, k_, l_, c1 in nonzero:
        for i_ in range(n):
            row = f[i_][l_]
            for m_ in range(n):
                c2 = row[m_]
                if c2 is sp.S.Zero or c2 == 0:
                    continue
                bump((i_, j_, k_, m_), c2 * c1)
    # term 3: (-1)^{p_k (p_i+p_j)} f[k][l][m] f[i][j][l]
    for i_, j_, l_, c1 in nonzero:
        for k_ in range(n):
            row = f[k_][l_]
            for m_ in range(n):
                c2 = row[m_]
                if c2 is sp.S.Zero or c2 == 0:
                    continue
                sgn = (-1) ** (p[k_] * (p[i_] + p[j_]))
                bump((i_, j_, k_, m_), sgn * c2 * c1)
    out = {}
    for key, val in acc.items():
        val = sp.expand(val)
        if not is_zero_expr(val):
            out[key] = val
    return out


def jacobi_residual_matrix(g: LieSuperalgebra) -> dict:
    """Matrix-form graded Jacobi residual, keyed by (i, j) with a matrix value.

    For each pair: sum_k adj(i)[j,k] adj(k) - adj(j) adj(i)
    + (-1)^{|i||j|} adj(i) adj(j).
    """
    n, p = g.dim, g.parities
    adj = [adjoint(g, i) for i in range(n)]
    out = {}
    for i in range(n):
        for j in range(n):
            acc = SuperMatrix.zeros(g.parities, g.parities)
            for k in range(n):
                acc = acc + adj[k].scale(adj[i][j, k])
            acc = acc - adj[j] @ adj[i]
            term = adj[i] @ adj[j]
            acc = acc + (term if not (p[i] and p[j]) else -term)
            if not acc.is_zero():
                out[(i, j)] = acc
    return out


def validate_structure(g: LieSuperalgebra, matrix_form: bool = True) -> ValidationReport:
    """Check graded antisymmetry, the grading constraint, and the graded
    Jacobi identity.  With `matrix_form` (the default) the matrix-form
    residual is also computed and cross-checked entrywise against the index
    form; large algebras validated in bulk can skip it."""
    report = ValidationReport()
    n, p, f = g.dim, g.parities, g.f
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c = f[i][j][k]
                sign = -1 if not (p[i] and p[j]) else 1
                resid = sp.expand(c - sign * f[j][i][k])
                if not is_zero_expr(resid):
                    report.antisymmetry.append((i, j, k, resid))
                if (p[i] + p[j]) % 2 != p[k] and not is_zero_expr(c):
                    report.grading.append((i, j, k, c))
    report.jacobi = jacobi_residual_index(g)
    if not matrix_form:
        report.jacobi_matrix = {key: True for key in report.jacobi}
        report.crosscheck_ok = True
        return report
    mform = jacobi_residual_matrix(g)
    report.jacobi_matrix = {
        key: [[e.expr for e in row] for row in mat.rows]
        for key, mat in mform.items()
    }
    # The matrix-form residual at (i, j), entry (a, m), equals
    # (-1)^{|i||j|} times the index-form residual at (j, i, a, m).
    agree = True
    if not report.antisymmetry and not report.grading:
        idx = report.jacobi
        for i in range(n):
            for j in range(n):
                mat = mform.get((i, j))
                for a in range(n):
                    for m in range(n):
                        lhs = mat[a, m].expr if mat is not None else sp.S.Zero
                        rhs = (-1) ** (p[i] * p[j]) * idx.get((j, i, a, m), sp.S.Zero)
                        if not is_zero_expr(lhs - rhs):
                            agree = False
    report.crosscheck_ok = agree
    return report


# ---------------------------------------------------------------------------
# transport, automorphisms, isomorphisms
# ---------------------------------------------------------------------------


def transport_structure(g: LieSuperalgebra, target: LieSuperalgebra, C: SuperMatrix):
    """Residual of the graded change-of-basis law X'_i = (-1)^{|j|} C_i^j X_j.

    Zero residual means the primed generators, built inside `g`, satisfy
    `target`'s relations.
    """
    n, p = g.dim, g.parities
    c = [[sp.sympify(C[i, j].expr) for j in range(n)] for i in range(n)]
    resid = {}
    for i in range(n):
        for j in range(n):
            for e in range(n):
                lhs = sp.S.Zero
                for a in range(n):
                    if c[i][a] == 0:
                        continue
                    for b in range(n):
                        if c[j][b] == 0:
                            continue
                        lhs += (-1) ** (p[a] + p[b]) * c[i][a] * c[j][b] * g.f[a][b][e]
                rhs = sp.S.Zero
                for k in range(n):
                    rhs += (-1) ** p[e] * target.f[i][j][k] * c[k][e]
                d = sp.expand(lhs - rhs)
                if not is_zero_expr(d):
                    resid[(i, j, e)] = d
    return resid


def _check_regular(C: SuperMatrix):
    if C.det().is_zero():
        raise ValueError("transformation matrix is singular")


def is_automorphism(g: LieSuperalgebra, A: SuperMatrix) -> bool:
    _check_regular(A)
    return not transport_structure(g, g, A)


def is_isomorphism(g: LieSuperalgebra, target: LieSuperalgebra, C: SuperMatrix) -> bool:
    """True iff transporting `g`'s constants through C yields `target`'s."""
    _check_regular(C)
    return not transport_structure(g, target, C)
