"""Z2-graded matrices: graded tensor product, supertranspose, supertrace,
and exact exponentials of the closure classes the package needs.

Entries are ring elements exposing ``+``, ``*``, unary ``-`` and
``is_zero()``; ``Scalar`` is the default, Grassmann-valued entries are used
by the superspace modules.  Matrix multiplication keeps entry order, so
noncommutative entries are safe.
"""
from __future__ import annotations

import sympy as sp

from .scalars import Scalar, is_zero_expr

__all__ = [
    "EVEN",
    "ODD",
    "GradedShapeError",
    "ExactExponentialError",
    "SuperMatrix",
    "gtensor",
    "expm_exact",
]

EVEN, ODD = 0, 1

# Sign convention for the supertranspose, switchable in exactly this one
# place.  False puts the sign on the odd-row/even-col block of the result
# ([[Pt, Rt], [-Qt, St]]); True, the shipped default, puts it on the
# even-row/odd-col block ([[Pt, -Rt], [Qt, St]]).  The r-matrix
# reproduction suite pins the default.
MIRROR_SUPERTRANSPOSE = True


class GradedShapeError(ValueError):
    """Incompatible graded index sets; `axis` names the offending side."""

    def __init__(self, message: str, axis: str):
        super().__init__(f"{message} (axis: {axis})")
        self.axis = axis


class ExactExponentialError(ValueError):
    """Matrix outside the closure classes that exponentiate exactly."""


def _aszero(entry):
    if isinstance(entry, Scalar):
        return entry.is_zero()
    if isinstance(entry, sp.Expr):
        return is_zero_expr(entry)
    return entry.is_zero()


class SuperMatrix:
    """Matrix over a graded index pair (row parities, column parities)."""

    __slots__ = ("row_parity", "col_parity", "rows")

    def __init__(self, rows, row_parity, col_parity):
        self.row_parity = tuple(int(p) % 2 for p in row_parity)
        self.col_parity = tuple(int(p) % 2 for p in col_parity)
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != len(self.row_parity):
            raise GradedShapeError("row count does not match row parities", "row")
        for r in rows:
            if len(r) != len(self.col_parity):
                raise GradedShapeError("column count does not match column parities", "col")
        self.rows = rows

    # -- constructors ----------------------------------------------------

    @classmethod
    def zeros(cls, row_parity, col_parity, zero=None):
        zero = Scalar(0) if zero is None else zero
        return cls(
            [[zero for _ in col_parity] for _ in row_parity], row_parity, col_parity
        )

    @classmethod
    def identity(cls, parity, one=None, zero=None):
        one = Scalar(1) if one is None else one
        zero = Scalar(0) if zero is None else zero
        n = len(parity)
        return cls(
            [[one if i == j else zero for j in range(n)] for i in range(n)],
            parity,
            parity,
        )

    @classmethod
    def from_exprs(cls, rows, row_parity, col_parity):
        return cls(
            [[Scalar(e) for e in r] for r in rows], row_parity, col_parity
        )

    # -- basics ------------------------------------------------------------

    @property
    def shape(self):
        return (len(self.row_parity), len(self.col_parity))

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def map(self, fn) -> "SuperMatrix":
        return SuperMatrix(
            [[fn(e) for e in r] for r in self.rows], self.row_parity, self.col_parity
        )

    def __add__(self, other: "SuperMatrix"):
        self._check_same_grading(other)
        return SuperMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
            self.row_parity,
            self.col_parity,
        )

    def __sub__(self, other: "SuperMatrix"):
        return self + (-other)

    def __neg__(self):
        return self.map(lambda e: -e)

    def scale(self, c) -> "SuperMatrix":
        return self.map(lambda e: c * e)

    def __rmul__(self, c):
        if isinstance(c, SuperMatrix):
            return NotImplemented
        return self.scale(c)

    def __matmul__(self, other: "SuperMatrix"):
        if self.col_parity != other.row_parity:
            raise GradedShapeError(
                "contraction parities differ "
                f"({self.col_parity} vs {other.row_parity})",
                "contraction",
            )
        n = len(other.col_parity)
        out = []
        for i in range(len(self.row_parity)):
            row = []
            for j in range(n):
                acc = None
                for k in range(len(self.col_parity)):
                    term = self.rows[i][k] * other.rows[k][j]
                    acc = term if acc is None else acc + term
                row.append(acc)
            out.append(row)
        return SuperMatrix(out, self.row_parity, other.col_parity)

    def _check_same_grading(self, other):
        if self.row_parity != other.row_parity:
            raise GradedShapeError("row gradings differ", "row")
        if self.col_parity != other.col_parity:
            raise GradedShapeError("column gradings differ", "col")

    def eq(self, other: "SuperMatrix") -> bool:
        if (
            self.row_parity != other.row_parity
            or self.col_parity != other.col_parity
        ):
            return False
        for ra, rb in zip(self.rows, other.rows):
            for a, b in zip(ra, rb):
                if not _aszero(a - b):
                    return False
        return True

    def is_zero(self) -> bool:
        return all(_aszero(e) for r in self.rows for e in r)

    # -- grading -----------------------------------------------------------

    def parity(self) -> int | None:
        """0 for even, 1 for odd, None for a genuinely mixed matrix."""
        even = odd = True
        for i, rp in enumerate(self.row_parity):
            for j, cp in enumerate(self.col_parity):
                if _aszero(self.rows[i][j]):
                    continue
                if (rp + cp) % 2:
                    even = False
                else:
                    odd = False
        if even:
            return EVEN
        if odd:
            return ODD
        return None

    def even_part(self) -> "SuperMatrix":
        return self._parity_part(EVEN)

    def odd_part(self) -> "SuperMatrix":
        return self._parity_part(ODD)

    def _parity_part(self, p):
        zero = Scalar(0)
        rows = [
            [
                self.rows[i][j]
                if (self.row_parity[i] + self.col_parity[j]) % 2 == p
                else zero
                for j in range(len(self.col_parity))
            ]
            for i in range(len(self.row_parity))
        ]
        return SuperMatrix(rows, self.row_parity, self.col_parity)

    # -- graded operations ---------------------------------------------------

    def supertranspose(self) -> "SuperMatrix":
        n, m = self.shape
        out = [[None] * n for _ in range(m)]
        for a in range(m):
            for b in range(n):
                pa, pb = self.col_parity[a], self.row_parity[b]
                if MIRROR_SUPERTRANSPOSE:
                    sign = -1 if (pb and not pa) else 1
                else:
                    sign = -1 if (pa and not pb) else 1
                entry = self.rows[b][a]
                out[a][b] = entry if sign == 1 else -entry
        return SuperMatrix(out, self.col_parity, self.row_parity)

    def supertrace(self, with_flag: bool = False):
        """Bosonic-block trace minus fermionic-block trace.

        An odd matrix has identically vanishing supertrace; instead of
        raising, the value 0 comes back with `odd_input=True` when
        `with_flag` is set.
        """
        if self.row_parity != self.col_parity:
            raise GradedShapeError("supertrace needs matching gradings", "contraction")
        acc = None
        for i, p in enumerate(self.row_parity):
            term = self.rows[i][i] if p == EVEN else -self.rows[i][i]
            acc = term if acc is None else acc + term
        odd_input = self.parity() == ODD
        if with_flag:
            return acc, odd_input
        return acc

    def gtensor(self, other: "SuperMatrix") -> "SuperMatrix":
        return gtensor(self, other)

    # -- exact linear algebra (Scalar entries only) ---------------------------

    def _sym(self) -> sp.Matrix:
        return sp.Matrix(
            [[sp.sympify(e.expr if isinstance(e, Scalar) else e) for e in r] for r in self.rows]
        )

    def det(self):
        if len(self.row_parity) != len(self.col_parity):
            raise GradedShapeError("determinant needs a square matrix", "row")
        return Scalar(sp.cancel(self._sym().det()))

    def inv(self) -> "SuperMatrix":
        m = self._sym()
        if m.det() == 0:
            raise ValueError("matrix is singular")
        inv = m.inv()
        return SuperMatrix.from_exprs(
            [[sp.cancel(inv[i, j]) for j in range(inv.cols)] for i in range(inv.rows)],
            self.col_parity,
            self.row_parity,
        )

    def __repr__(self):
        rows = ",\n  ".join(
            "[" + ", ".join(repr(e) for e in r) + "]" for r in self.rows
        )
        return f"SuperMatrix(rp={self.row_parity}, cp={self.col_parity},\n  {rows})"


def gtensor(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    """Graded tensor product: (A (x) B)_{ij;kl} = (-1)^{j(i+k)} A_ik B_jl.

    The composite row index runs over pairs (i, j) with i outer, likewise
    for columns; composite parities add.
    """
    rp = [(pi + pj) % 2 for pi in a.row_parity for pj in b.row_parity]
    cp = [(pi + pj) % 2 for pi in a.col_parity for pj in b.col_parity]
    na, ma = a.shape
    nb, mb = b.shape
    rows = []
    for i in range(na):
        for j in range(nb):
            row = []
            for k in range(ma):
                for l in range(mb):
                    sign = (
                        -1
                        if b.row_parity[j] and (a.row_parity[i] + a.col_parity[k]) % 2
                        else 1
                    )
                    entry = a.rows[i][k] * b.rows[j][l]
                    row.append(entry if sign == 1 else -entry)
            rows.append(row)
    return SuperMatrix(rows, rp, cp)


def _is_diagonal(m: SuperMatrix) -> bool:
    n, c = m.shape
    return n == c and all(
        _aszero(m.rows[i][j]) for i in range(n) for j in range(c) if i != j
    )


def _nilpotency_index(m: SuperMatrix) -> int | None:
    n = m.shape[0]
    power = m
    for k in range(1, n + 1):
        if power.is_zero():
            return k
        power = power @ m
    return 1 if power.is_zero() else None


def _exp_diagonal(m: SuperMatrix) -> SuperMatrix:
    rows = []
    n = m.shape[0]
    for i in range(n):
        row = []
        for j in range(n):
            if i != j:
                row.append(Scalar(0))
            else:
                e = m.rows[i][i]
                expr = e.expr if isinstance(e, Scalar) else sp.sympify(e)
                row.append(Scalar(sp.exp(expr)))
        rows.append(row)
    return SuperMatrix(rows, m.row_parity, m.col_parity)


def _exp_nilpotent(m: SuperMatrix, index: int) -> SuperMatrix:
    out = SuperMatrix.identity(m.row_parity)
    power = SuperMatrix.identity(m.row_parity)
    fact = 1
    for k in range(1, index):
        power = power @ m
        fact *= k
        out = out + power.scale(Scalar(sp.Rational(1, fact)))
    return out


def expm_exact(m: SuperMatrix) -> SuperMatrix:
    """Exact matrix exponential for diagonal, nilpotent, or commuting
    diagonal-plus-nilpotent matrices.  Exponentials stay unevaluated
    symbols; anything outside these classes raises.
    """
    n, c = m.shape
    if n != c or m.row_parity != m.col_parity:
        raise GradedShapeError("exponential needs a square graded matrix", "row")
    if _is_diagonal(m):
        return _exp_diagonal(m)
    k = _nilpotency_index(m)
    if k is not None:
        return _exp_nilpotent(m, k)
    diag = SuperMatrix(
        [
            [m.rows[i][j] if i == j else Scalar(0) for j in range(n)]
            for i in range(n)
        ],
        m.row_parity,
        m.col_parity,
    )
    nil = m - diag
    k = _nilpotency_index(nil)
    if k is not None and (diag @ nil).eq(nil @ diag):
        return _exp_diagonal(diag) @ _exp_nilpotent(nil, k)
    raise ExactExponentialError(
        "cannot exponentiate exactly: not diagonal, nilpotent, "
        "or a commuting diagonal+nilpotent split"
    )
