import pytest

from braidkit import fock
from braidkit.fock import Bosons, FockOp, TruncationError, build_fock
from braidkit.scalars import ONE, ZERO, qrat
from braidkit.symmetries import make_symmetry

SYMS = {
    "flip2": lambda: make_symmetry("flip", N=2),
    "std2": lambda: make_symmetry("standard", N=2),
    "jordan10": lambda: make_symmetry("jordan", a=1, b=0),
    "jordan21": lambda: make_symmetry("jordan", a=2, b=1),
}


@pytest.fixture(scope="module")
def fock4():
    cache = {}

    def get(name, D=4):
        if (name, D) not in cache:
            cache[name, D] = build_fock(SYMS[name](), D)
        return cache[name, D]
    return get


@pytest.mark.parametrize("name", list(SYMS))
def test_dimensions(name):
    r = fock.dimension_report(SYMS[name](), 5)
    assert r["agree"]
    assert r["dims"] == [k + 1 for k in range(6)]


def test_dimensions_flip3():
    fb = build_fock(make_symmetry("flip", N=3), 3)
    assert fb.dims() == [1, 3, 6, 10]


def test_truncation_too_small(std2):
    with pytest.raises(ValueError):
        build_fock(std2, 1)
    with pytest.raises(ValueError):
        fock.ccr_check(std2, 2)
    with pytest.raises(ValueError):
        fock.yangian_rep_check(std2, 2)


def test_apply_outside_truncation(fock4):
    fb = fock4("std2")
    ap = fock.creation(fb, 0)
    with pytest.raises(TruncationError):
        ap.apply(fb.D, [ONE] * fb.dims()[fb.D])
    am = fock.annihilation(fb, 0)
    with pytest.raises(TruncationError):
        am.apply(0, [ONE])


@pytest.mark.parametrize("name", list(SYMS))
def test_ccr(name, fock4):
    fb = fock4(name)
    r = fock.ccr_check(fb.sym, 4, fb)
    assert r["passed"], r
    g = r["guarded_degrees"]
    assert g["creation"] == [0, 1, 2]
    assert g["annihilation"] == [2, 3, 4]
    assert g["mixed"] == [1, 2, 3]
    assert r["vacuum_rules"]


def test_wrong_ccr_sign_fails(fock4):
    # a^j a_i^+ + q^-1 (R^-1) a^+ a (wrong sign) is not delta
    fb = fock4("std2")
    sym = fb.sym
    bos = Bosons(fb)
    Ri, qi = sym.Rinv(), sym.q.inverse()
    ok = True
    for i in range(2):
        for j in range(2):
            lhs = bos.minus[j] @ bos.plus[i]
            for k in range(2):
                for l in range(2):
                    c = Ri[(i, k), (j, l)]
                    if not c.is_zero():
                        lhs = lhs + (bos.plus[l] @ bos.minus[k]).scale(qi * c)
            ok &= lhs.equals(FockOp.identity(fb, ONE if i == j else ZERO))
    assert not ok


def test_vacuum(fock4):
    fb = fock4("jordan10")
    bos = Bosons(fb)
    for j in range(2):
        for i in range(2):
            out = (bos.minus[j] @ bos.plus[i]).apply(0, [ONE])
            assert out == [ONE if i == j else ZERO]


@pytest.mark.parametrize("name", list(SYMS))
def test_ideal_preserved(name, fock4):
    fb = fock4(name)
    assert fock.ideal_preserved(fb)
    assert fock.ideal_preserved(fb, right=True)


@pytest.mark.parametrize("name", list(SYMS))
def test_dual_bases(name, fock4):
    fb = fock4(name)
    assert fock.dual_bases_agree(fb)
    assert fock.dual_relations_match(fb.sym)


@pytest.mark.parametrize("name", list(SYMS))
def test_mre_rep(name, fock4):
    fb = fock4(name)
    r = fock.mre_rep_check(fb.sym, 4, fb)
    assert r["passed"], r


@pytest.mark.parametrize("name", list(SYMS))
def test_eval_reps(name):
    r = fock.eval_reps_check(SYMS[name]())
    assert r["covariant"] and r["contravariant"]


def test_hecke_shift(std2, flip2):
    h = std2.q - std2.q.inverse()
    assert fock.hecke_shift(std2) == -h.inverse()
    assert fock.hecke_shift(flip2).is_zero()


def test_standard_at_q_one_rejected():
    from braidkit.symmetries import SymmetryError

    with pytest.raises(SymmetryError):
        make_symmetry("standard", N=2, q="1")


def test_yangian_rep_hecke_variants(fock4):
    fb = fock4("std2", 3)
    r = fock.yangian_rep_check(fb.sym, 3, fb=fb)
    v = r["variants"]
    assert r["passed"]
    assert v["standard"]["holds"] and v["renormalized"]["holds"]
    assert not v["printed_sign"]["holds"] and not v["printed_renormalized"]["holds"]
    assert r["pairs"] == 9


@pytest.mark.parametrize("name", ["flip2", "jordan10"])
def test_yangian_rep_involutive(name, fock4):
    fb = fock4(name, 3)
    r = fock.yangian_rep_check(fb.sym, 3, fb=fb)
    assert r["passed"] and list(r["variants"]) == ["standard"]


@pytest.mark.parametrize("name", ["std2", "jordan10"])
def test_d_stability(name):
    r = fock.d_stability_check(SYMS[name](), 3)
    assert r["passed"], r


def test_fock_op_algebra(fock4):
    fb = fock4("flip2")
    a = fock.creation(fb, 0)
    with pytest.raises(ValueError):
        a + fock.annihilation(fb, 0)
    assert (a - a).is_zero()
    assert a.scale(qrat(2)).equals(a + a)
