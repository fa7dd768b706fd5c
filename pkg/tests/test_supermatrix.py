import random

import pytest
import sympy as sp

from superbialg.scalars import H, Scalar
from superbialg.supermatrix import (
    ExactExponentialError,
    GradedShapeError,
    SuperMatrix,
    expm_exact,
    gtensor,
)

from oracles import gtensor_entry_oracle, supertranspose_oracle

P11 = (0, 1)
P22 = (0, 0, 1, 1)


def rand_matrix(rng, parity, homogeneous=None):
    n = len(parity)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if homogeneous is not None and (parity[i] + parity[j]) % 2 != homogeneous:
                row.append(sp.S.Zero)
            else:
                row.append(sp.Rational(rng.randint(-4, 4), rng.randint(1, 3)))
        rows.append(row)
    return SuperMatrix.from_exprs(rows, parity, parity)


def test_gtensor_identity_case():
    I11 = SuperMatrix.identity(P11)
    assert gtensor(I11, I11).eq(SuperMatrix.identity((0, 1, 1, 0)))


def test_gtensor_matches_sign_rule_oracle():
    X1 = [[sp.Rational(1, 2), 0], [0, sp.Rational(-1, 2)]]
    X3 = [[0, 1], [0, 0]]
    A = SuperMatrix.from_exprs(X1, P11, P11)
    B = SuperMatrix.from_exprs(X3, P11, P11)
    T = gtensor(A, B)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    want = gtensor_entry_oracle(X1, X3, P11, P11, P11, P11, i, j, k, l)
                    assert sp.expand(T[2 * i + j, 2 * k + l].expr - want) == 0


def test_gtensor_odd_odd_sign():
    # an odd-row, odd-(A-row), even-(A-col) entry picks up the minus sign
    A = SuperMatrix.from_exprs([[0, 0], [1, 0]], P11, P11)  # entry (odd, even)
    B = SuperMatrix.from_exprs([[0, 0], [1, 0]], P11, P11)
    T = gtensor(A, B)
    # i=1 (odd), j=1 (odd), k=0 (even), l=0: sign (-1)^{j(i+k)} = -1
    assert T[2 * 1 + 1, 2 * 0 + 0].expr == -1


def test_gtensor_shape_error_names_axis():
    A = SuperMatrix.identity(P11)
    B = SuperMatrix.identity(P22)
    with pytest.raises(GradedShapeError) as err:
        A @ B
    assert err.value.axis == "contraction"


def test_supertranspose_diagonal_even_fixed():
    D = SuperMatrix.from_exprs([[2, 0], [0, 3]], P11, P11)
    assert D.supertranspose().eq(D)


def test_supertranspose_involution_on_even():
    rng = random.Random(3)
    for _ in range(20):
        A = rand_matrix(rng, P22, homogeneous=0)
        assert A.supertranspose().supertranspose().eq(A)


def test_supertranspose_matches_block_oracle():
    rng = random.Random(5)
    raw = [[sp.Rational(rng.randint(-3, 3)) for _ in range(4)] for _ in range(4)]
    A = SuperMatrix.from_exprs(raw, P22, P22)
    want = supertranspose_oracle(raw, P22, P22, mirror=True)
    got = A.supertranspose()
    for i in range(4):
        for j in range(4):
            assert sp.expand(got[i, j].expr - want[i][j]) == 0


def test_supertranspose_adjoint_of_first_generator():
    from superbialg.catalog import gl11
    from superbialg.liealg import adjoint

    X1 = adjoint(gl11(), 0)
    raw = [[X1[i, j].expr for j in range(4)] for i in range(4)]
    want = supertranspose_oracle(raw, P22, P22, mirror=True)
    got = X1.supertranspose()
    for i in range(4):
        for j in range(4):
            assert sp.expand(got[i, j].expr - want[i][j]) == 0


def test_supertrace_basics():
    I22m = SuperMatrix.identity(P22)
    assert I22m.supertrace() == Scalar(0)
    X2 = SuperMatrix.identity(P11)
    assert X2.supertrace() == Scalar(0)
    X3 = SuperMatrix.from_exprs([[0, 1], [0, 0]], P11, P11)
    value, odd_input = X3.supertrace(with_flag=True)
    assert value == Scalar(0) and odd_input


def test_supertrace_of_four_dim_generator_rep():
    from superbialg.disc import rep_matrices

    X1 = SuperMatrix.from_exprs(rep_matrices()[0], P22, P22)
    assert X1.supertrace() == Scalar(0)


def test_graded_identities_on_random_homogeneous_matrices():
    rng = random.Random(11)
    for _ in range(200):
        pa, pb = rng.randint(0, 1), rng.randint(0, 1)
        A = rand_matrix(rng, P22, homogeneous=pa)
        B = rand_matrix(rng, P22, homogeneous=pb)
        sign = (-1) ** (pa * pb)
        # supertrace symmetry
        lhs = (A @ B).supertrace()
        rhs = (B @ A).supertrace()
        assert lhs == Scalar(sign) * rhs
        # supertrace kills the graded commutator
        comm = A @ B - (B @ A).scale(Scalar(sign))
        assert comm.supertrace() == Scalar(0)
        # supertranspose is an anti-automorphism up to the parity sign
        st = (A @ B).supertranspose()
        ref = (B.supertranspose() @ A.supertranspose()).scale(Scalar(sign))
        assert st.eq(ref)


def test_gtensor_interchange_law():
    rng = random.Random(13)
    for _ in range(40):
        ps = [rng.randint(0, 1) for _ in range(4)]
        A, B, C, D = (rand_matrix(rng, P22, homogeneous=p) for p in ps)
        lhs = gtensor(A, B) @ gtensor(C, D)
        sign = (-1) ** (ps[1] * ps[2])
        rhs = gtensor(A @ C, B @ D).scale(Scalar(sign))
        assert lhs.eq(rhs)


def test_gtensor_parity_additivity():
    rng = random.Random(17)
    for _ in range(20):
        pa, pb = rng.randint(0, 1), rng.randint(0, 1)
        A = rand_matrix(rng, P11, homogeneous=pa)
        B = rand_matrix(rng, P11, homogeneous=pb)
        T = gtensor(A, B)
        if not T.is_zero():
            assert T.parity() == (pa + pb) % 2


def test_expm_zero_and_diagonal():
    Z = SuperMatrix.zeros(P22, P22)
    assert expm_exact(Z).eq(SuperMatrix.identity(P22))
    a, b = sp.symbols("qa qb")
    D = SuperMatrix.from_exprs([[a, 0], [0, b]], (0, 0), (0, 0))
    E = expm_exact(D)
    assert E[0, 0].expr == sp.exp(a) and E[1, 1].expr == sp.exp(b)


def test_expm_inverse_property():
    N = SuperMatrix.from_exprs([[0, 2, 1], [0, 0, 3], [0, 0, 0]], (0, 0, 0), (0, 0, 0))
    E, Em = expm_exact(N), expm_exact(-N)
    assert (E @ Em).eq(SuperMatrix.identity((0, 0, 0)))


def test_expm_commuting_split():
    A = SuperMatrix.from_exprs([[2, 1], [0, 2]], (0, 0), (0, 0))
    E = expm_exact(A)
    assert sp.expand(E[0, 0].expr - sp.exp(2)) == 0
    assert sp.expand(E[0, 1].expr - sp.exp(2)) == 0


def test_expm_rejects_unsupported():
    A = SuperMatrix.from_exprs([[1, 1], [1, 0]], (0, 0), (0, 0))
    with pytest.raises(ExactExponentialError):
        expm_exact(A)


def test_expm_quantum_r_shape():
    from superbialg.quantize import quantum_r_classical

    r = quantum_r_classical()
    R = expm_exact(r.scale(Scalar(H)))
    assert [str(R[i, i].expr) for i in range(4)] == ["1", "exp(h)", "exp(-h)", "1"]
