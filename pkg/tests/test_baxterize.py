from fractions import Fraction

import pytest

from braidkit import baxterize as bx
from braidkit.scalars import ONE, Q, qnum, qrat
from braidkit.symmetries import make_symmetry
from braidkit.tensors import LinOp

SYMS = [make_symmetry("flip", N=2), make_symmetry("flip", N=3), make_symmetry("standard", N=2),
        make_symmetry("standard", N=3), make_symmetry("jordan", a=1, b=0), make_symmetry("jordan", a=-2, b=3)]


@pytest.mark.parametrize("sym", SYMS, ids=lambda s: s.name)
def test_param_ybe_full_grid(sym):
    cert = bx.certify_param_ybe(bx.baxterize(sym), n=7, seed=3)
    assert cert.passed and cert.points_checked == 343


@pytest.mark.parametrize("sym", SYMS[:3], ids=lambda s: s.name)
def test_kernel_agrees_with_direct_products(sym):
    grid = bx.ybe_grid(7, 5)
    cr = bx.baxterize(sym)
    for u, v, w in zip(grid[0].points, grid[1].points, grid[2].points):
        assert bx.ybe_at(cr, u, v, w)


def test_flavors(flip2, std2):
    assert bx.baxterize(flip2).flavor == bx.RATIONAL
    assert bx.baxterize(std2).flavor == bx.TRIG


def test_yang_matrix(flip2):
    cr = bx.baxterize(flip2)
    u, v = Fraction(5, 2), Fraction(-1, 3)
    assert cr(u, v) == LinOp.flip(2) - LinOp.identity(2, 2).scale(qrat(1 / (u - v)))


def test_standard_entries(std2):
    cr = bx.baxterize(std2)
    u, v = Fraction(3), Fraction(2)
    x = qrat(u / v)
    R = cr(u, v)
    # diagonal entry is (q^-1 x - q)/(x - 1)
    assert R.data[0, 0] == Q - x * (Q - Q.inverse()) / (x - 1)
    assert R.data[0, 0] * (x - 1) == Q.inverse() * x - Q


@pytest.mark.parametrize("k", [1, 2])
def test_standard_at_q_power(std2, k):
    # x = q^(2k): R(u, v) = R - (q^k / k_q) I
    cr = bx.baxterize(std2)
    R = cr(Q ** (2 * k), ONE)
    assert R == std2.R - LinOp.identity(2, 2).scale(Q ** k / qnum(k))


def test_trig_depends_on_ratio(std2):
    cr = bx.baxterize(std2)
    assert cr(2, 1) == cr(4, 2)
    assert cr(Fraction(3, 5), Fraction(7, 5)) == cr(3, 7)


def test_rational_depends_on_difference(jordan10):
    cr = bx.baxterize(jordan10)
    assert cr(5, 2) == cr(Fraction(13, 2), Fraction(7, 2))


def test_pole(std2):
    with pytest.raises(bx.PoleError):
        bx.baxterize(std2)(2, 2)


def test_perturbed_g_fails(flip2):
    cr = bx.baxterize(flip2, g=lambda u, v: qrat(1) / (qrat(u) - qrat(v)) ** 2)
    cert = bx.certify_param_ybe(cr, n=7, seed=1)
    assert not cert.passed and cert.first_failure is not None


@pytest.mark.parametrize("a", [1, -1, Fraction(5, 2)])
def test_rational_family_a_over_difference(jordan10, a):
    # any g = a/(u-v) works for an involutive symmetry; the default is a = -1
    cr = bx.baxterize(jordan10, g=lambda u, v: qrat(a) / (qrat(u) - qrat(v)))
    assert bx.certify_param_ybe(cr, n=7, seed=4).passed


def test_constant_g_fails(std2):
    cr = bx.baxterize(std2, g=lambda u, v: qrat(2))
    assert not bx.certify_param_ybe(cr, n=7, seed=1).passed


def test_insufficient_sample(flip2):
    with pytest.raises(bx.InsufficientSample):
        bx.certify_param_ybe(bx.baxterize(flip2), n=6)


@pytest.mark.parametrize("sym", SYMS, ids=lambda s: s.name)
def test_unitarity_profiles(sym):
    rep, ev = bx.unitarity_and_normalize(bx.baxterize(sym), n=10, seed=2)
    assert rep.passed and rep.phi_ok and rep.normalized_ok
    assert len(rep.pairs) == 10


def test_phi_formulas(flip2, std2):
    u, v = Fraction(7, 3), Fraction(-2)
    assert bx.baxterize(flip2).phi(u, v) == 1 - qrat(1 / (u - v) ** 2)
    h = Q - Q.inverse()
    assert bx.baxterize(std2).phi(u, v) == 1 - qrat(u * v) * h * h / qrat((u - v) ** 2)


def test_hecke_shifted_relation(std2, std3):
    for s in (std2, std3):
        cr = bx.baxterize(s)
        for u, v in bx.sample_pairs(5, 9):
            assert bx.hecke_shift_holds(cr, u, v)


def test_sampling_is_deterministic():
    assert bx.sample_points(10, 4) == bx.sample_points(10, 4)
    assert len(set(bx.sample_points(30, 1))) == 30
    with pytest.raises(ValueError):
        bx.SpectralSample((Fraction(1), Fraction(1)), 0)
