import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidkit.ncalg.poly import Alphabet
from braidkit.ncalg.presentation import barred, gen_matrix, matrix_labels
from braidkit.scalars import ONE, Q, ZERO, qnum, qrat
from braidkit.symmetries import make_symmetry
from braidkit.tensors import LinOp, conjugation_invariance_check, flat_index, multi_index, place_on_legs


def int_op(N, legs, entries):
    data = np.array([qrat(x) for x in entries], dtype=object).reshape(N ** legs, N ** legs)
    return LinOp(N, legs, data)


ints = st.integers(min_value=-3, max_value=3)


def test_flip_fixes_index_convention():
    # P[(i,j),(k,l)] = delta_il delta_jk with leg 1 outermost
    P = LinOp.flip(3)
    for r in range(9):
        for c in range(9):
            i, j = multi_index(r, 3, 2)
            k, l = multi_index(c, 3, 2)
            assert P.data[r, c] == (ONE if (i == l and j == k) else ZERO)
    assert flat_index((1, 2), 3) == 5
    assert multi_index(5, 3, 2) == (1, 2)


def test_place_flip_on_three_legs():
    P = LinOp.flip(2)
    placed = place_on_legs(P, 3, 1)
    assert placed.data.shape == (8, 8)
    assert placed == P.kron(LinOp.identity(2))
    assert place_on_legs(P, 3, 2) == LinOp.identity(2).kron(P)


@pytest.mark.parametrize("k,i", [(2, 1), (3, 1), (3, 2), (4, 3)])
def test_place_identity(k, i):
    assert place_on_legs(LinOp.identity(2, 2), k, i) == LinOp.identity(2, k)


def test_leg_overflow():
    with pytest.raises(ValueError):
        place_on_legs(LinOp.flip(2), 2, 2)
    with pytest.raises(ValueError):
        LinOp.flip(2).partial_trace(3)


def test_braid_relation_standard_three_legs(std2):
    R1, R2 = std2.R_at(1, 3), std2.R_at(2, 3)
    assert R1 @ R2 @ R1 == R2 @ R1 @ R2


@pytest.mark.parametrize("N", [1, 2, 3])
def test_partial_trace_of_flip(N):
    assert LinOp.flip(N).partial_trace(2) == LinOp.identity(N)


@settings(max_examples=25, deadline=None)
@given(st.lists(ints, min_size=4, max_size=4), st.lists(ints, min_size=4, max_size=4))
def test_partial_trace_of_product(a, b):
    A, B = int_op(2, 1, a), int_op(2, 1, b)
    assert A.kron(B).partial_trace(2) == A.scale(B.trace())
    assert A.kron(B).partial_trace(1) == B.scale(A.trace())


@settings(max_examples=15, deadline=None)
@given(st.lists(ints, min_size=64, max_size=64))
def test_partial_traces_commute(entries):
    X = int_op(2, 3, entries)
    assert X.partial_trace(3).partial_trace(1) == X.partial_trace(1).partial_trace(2)


@settings(max_examples=15, deadline=None)
@given(st.lists(ints, min_size=16, max_size=16), st.lists(ints, min_size=16, max_size=16))
def test_place_is_homomorphism(a, b):
    A, B = int_op(2, 2, a), int_op(2, 2, b)
    for start in (1, 2):
        assert place_on_legs(A @ B, 3, start) == place_on_legs(A, 3, start) @ place_on_legs(B, 3, start)


def test_skew_contraction_standard(std2):
    # Tr_2 R_12 Psi_23 = P_13 by direct contraction
    lhs = (std2.R_at(1, 3) @ place_on_legs(std2.Psi, 3, 2)).partial_trace(2)
    assert lhs == LinOp.flip(2)


def test_r_trace_with_identity_is_trace():
    X = int_op(2, 2, range(16))
    assert X.r_trace([1, 2], LinOp.identity(2)) == X.trace()


def test_r_trace_of_identity(std2):
    assert LinOp.identity(2).r_trace([1], std2.C) == Q ** -2 * (Q + Q.inverse())


@pytest.mark.parametrize("sym", [make_symmetry("standard", N=2), make_symmetry("standard", N=3),
                                 make_symmetry("jordan", a=2, b=-1), make_symmetry("flip", N=3)],
                         ids=lambda s: s.name)
def test_r_trace_of_R_is_identity(sym):
    assert sym.R.r_trace([2], sym.C) == LinOp.identity(sym.N)


def test_conjugation_invariance_unit_matrix(std2):
    E11 = LinOp.from_components(2, 1, {((0,), (0,)): ONE})
    assert conjugation_invariance_check(E11, std2.R, std2.C)
    I = LinOp.identity(2)
    Rinv = std2.Rinv()
    lhs = (Rinv @ place_on_legs(I, 2, 1) @ std2.R).r_trace([2], std2.C)
    assert lhs == I.scale(Q ** -2 * qnum(2))


@settings(max_examples=15, deadline=None)
@given(st.lists(ints, min_size=9, max_size=9))
def test_conjugation_invariance_flip(entries):
    X = int_op(3, 1, entries)
    assert conjugation_invariance_check(X, LinOp.flip(3), LinOp.identity(3))


@pytest.mark.parametrize("k", [2, 3])
def test_cyclic_property(std2, k):
    A = Alphabet(matrix_labels("l", 2))
    L = gen_matrix(A, "l", 2)
    X = barred(std2, L, k)[0]
    for c in barred(std2, L, k)[1:]:
        X = X @ c
    p = std2.R_at(1, k).scale(qrat(2))
    if k == 3:
        p = p + std2.R_at(1, 3) @ std2.Rinv_at(2, 3)
    legs = range(1, k + 1)
    assert (X @ p).r_trace(legs, std2.C) == (p @ X).r_trace(legs, std2.C)


def test_linop_json_roundtrip(std2):
    assert LinOp.from_json(std2.Psi.to_json()) == std2.Psi
    assert std2.R.to_json()["legs"] == 2
