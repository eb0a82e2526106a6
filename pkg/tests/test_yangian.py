from fractions import Fraction

import pytest

from braidkit.ncalg.poly import NCPoly
from braidkit.scalars import qrat
from braidkit.symmetries import make_symmetry
from braidkit.yangian import evaluation as ev
from braidkit.yangian import identities as ids
from braidkit.yangian.presentation import (BRAIDED, RTT, _Copies, _alphabet, _span_rank, build_yangian,
                                           coefficient_relation, coproduct_counit_check, counit,
                                           expansion_equivalence_check, weight_one_matches_mre)


@pytest.fixture(scope="module")
def targets():
    cache = {}

    def get(sym, mode=BRAIDED, cap=3):
        key = (sym.name, mode, cap)
        if key not in cache:
            cache[key] = ev.EvalTarget(sym, mode, cap=cap)
        return cache[key]
    return get


# -- presentation --------------------------------------------------------------

def test_weight_one_matches_mre_involutive(flip2, jordan10):
    for s in (flip2, jordan10):
        r = weight_one_matches_mre(s)
        assert r["passed"], r


def test_weight_one_differs_from_re_for_hecke(std2):
    r = weight_one_matches_mre(std2)
    assert not r["passed"]
    assert r["union_rank"] > min(r["yangian_rank"], r["target_rank"])


def test_hecke_relations_homogeneous_involutive_filtered(std2, flip2, jordan10):
    assert build_yangian(std2, 2).presentation.is_homogeneous()
    assert not build_yangian(flip2, 2).presentation.is_homogeneous()
    assert not build_yangian(jordan10, 2).presentation.is_homogeneous()


def test_hecke_r0_relation_vanishes(std2):
    _, coeffs = _alphabet(std2.N, 3, BRAIDED)
    cp = _Copies(std2, coeffs, BRAIDED)
    for s in (1, 2, 3):
        X = coefficient_relation(std2, cp, 0, s)
        assert all(v.is_zero() for v in X.data.flat)


def test_labels_cover_relations(std2, flip2):
    for s in (std2, flip2):
        yp = build_yangian(s, 3)
        assert set(yp.labels) == set(range(len(yp.presentation.relations)))
        assert all(r + t <= 3 for r, t in yp.labels.values())


def _drinfeld(yp, N, K, sign=1):
    A = yp.alphabet

    def t(i, j, r):
        if r == 0:
            return NCPoly.const(1) if i == j else NCPoly()
        return A.gen(f"l[{i},{j};{r}]")

    out = []
    for r in range(K):
        for s in range(K - r):
            for i in range(1, N + 1):
                for j in range(1, N + 1):
                    for k in range(1, N + 1):
                        for l in range(1, N + 1):
                            lhs = (t(i, j, r + 1) * t(k, l, s) - t(k, l, s) * t(i, j, r + 1)
                                   - t(i, j, r) * t(k, l, s + 1) + t(k, l, s + 1) * t(i, j, r))
                            x = lhs - (t(k, j, r) * t(i, l, s) - t(k, j, s) * t(i, l, r)).scale(qrat(sign))
                            if not x.is_zero():
                                out.append(x)
    return out


@pytest.mark.parametrize("K", [2, 3])
def test_flip_yangian_is_classical_yangian(flip2, K):
    # the textbook relations of Y(gl(2)) up to the same filtration degree
    yp = build_yangian(flip2, K)
    dr = _drinfeld(yp, 2, K)
    cols = {}
    a = _span_rank(yp.presentation.relations, cols).rank
    b = _span_rank(dr, cols).rank
    c = _span_rank(yp.presentation.relations + dr, cols).rank
    assert a == b == c


def test_flip_yangian_differs_with_wrong_sign(flip2):
    yp = build_yangian(flip2, 2)
    cols = {}
    a = _span_rank(yp.presentation.relations, cols).rank
    assert _span_rank(yp.presentation.relations + _drinfeld(yp, 2, 2, sign=-1), cols).rank > a


@pytest.mark.parametrize("name", ["flip2", "std2", "jordan10"])
def test_expansion_equivalence(name, request):
    sym = request.getfixturevalue(name)
    r = expansion_equivalence_check(sym, 2)
    assert r["passed"], r


def test_expansion_limited():
    with pytest.raises(ValueError):
        expansion_equivalence_check(make_symmetry("flip", N=2), 5)


@pytest.mark.parametrize("mode", [BRAIDED, RTT])
def test_coproduct_counit(std2, jordan10, mode):
    for s in (std2, jordan10):
        r = coproduct_counit_check(s, 2, mode)
        assert r["passed"], r


def test_counit_values(std2):
    yp = build_yangian(std2, 1, RTT)
    A = yp.alphabet
    assert counit(yp, A.gen("t[1,1;0]")) == qrat(1)
    assert counit(yp, A.gen("t[1,2;0]")).is_zero()
    assert counit(yp, A.gen("t[1,1;1]")).is_zero()


def test_build_rejects():
    s = make_symmetry("flip", N=2)
    with pytest.raises(ValueError):
        build_yangian(s, 0)
    with pytest.raises(ValueError):
        build_yangian(s, 2, "other")


# -- evaluation morphisms --------------------------------------------------------

@pytest.mark.parametrize("name", ["jordan10", "std2", "flip2"])
def test_eval_morphism(name, request, targets):
    sym = request.getfixturevalue(name)
    r = ev.eval_morphism_check(sym, 3, 0, target=targets(sym, cap=2))
    assert r["passed"], r
    assert r["pairs"] >= 8


@pytest.mark.parametrize("name", ["jordan10", "std2"])
def test_eval_morphism_rtt(name, request, targets):
    sym = request.getfixturevalue(name)
    r = ev.eval_morphism_check(sym, 3, 0, mode=RTT, target=targets(sym, RTT, 2))
    assert r["passed"], r


def test_eval_morphism_needs_grid(std2):
    with pytest.raises(ValueError):
        ev.eval_morphism_check(std2, 2)


def test_shift_reparameterization(std2, jordan10, targets):
    # L(u) -> L(u - a) (involutive) or L(c u) (Hecke) lands on another sample point
    t = targets(jordan10, cap=2)
    for a in (Fraction(1), Fraction(5, 2)):
        X = ev.series_relation_at(t, Fraction(3) - a, Fraction(-2, 3) - a)
        assert ev._residual_failure(t, X) is None
    t = targets(std2, cap=2)
    for c in (Fraction(2), Fraction(-1, 3)):
        X = ev.series_relation_at(t, 3 * c, Fraction(-2, 3) * c)
        assert ev._residual_failure(t, X) is None


def test_pole_collision(std2, targets):
    with pytest.raises(ev.PoleCollision):
        ev.series_relation_at(targets(std2, cap=2), Fraction(2), Fraction(2))


def test_degree_bound(std2, flip2):
    assert ev.degree_bound(std2, 3, 2) == 3
    assert ev.degree_bound(flip2, 3, 2) == 9


def test_spectral_points_avoid_poles(flip2):
    pts = ev.spectral_points(flip2, 30, 1, shifts=3)
    assert len(set(pts)) == 30
    assert not any(p.denominator == 1 and 0 <= p <= 3 for p in pts)


# -- current identities ------------------------------------------------------------

IDENTITIES_HECKE = [("chn", 1), ("chn", 2), ("newton", 1), ("newton", 2), ("ch", 0), ("pm_det", 0),
                    ("mult_pow", 2), ("wedge_trace", 2)]
IDENTITIES_INV = [("chn", 1), ("chn", 2), ("newton", 1), ("newton", 2), ("ch", 0)]


@pytest.mark.parametrize("name,k", IDENTITIES_HECKE)
def test_identities_hecke(std2, targets, name, k):
    t = targets(std2)
    r = ev.identity_check(std2, name, k, target=t, fock=ev.fock_path(t, 4))
    assert r["passed"], r
    assert r["paths"] == ["ideal", "fock"]


@pytest.mark.parametrize("name,k", IDENTITIES_INV)
@pytest.mark.parametrize("sym", ["flip2", "jordan10"])
def test_identities_involutive(request, targets, sym, name, k):
    s = request.getfixturevalue(sym)
    t = targets(s)
    r = ev.identity_check(s, name, k, target=t, fock=ev.fock_path(t, 4))
    assert r["passed"], r


def test_identity_sample_count(std2, flip2):
    assert ev.identity_check(std2, "chn", 2)["samples"] == 3
    assert ev.identity_check(flip2, "chn", 2)["samples"] == 5
    with pytest.raises(ValueError):
        ev.identity_check(flip2, "chn", 2, samples=4)


def test_wrong_residual_fails_both_paths(std2, jordan10, targets):
    # e_1(u) is not the plain trace of L(u) for a Hecke symmetry; a shifted e_1 is not e_1
    for s in (std2, jordan10):
        t = targets(s)
        fk = ev.fock_path(t, 4)
        ctx = t.context(Fraction(7, 3))
        wrong = ids.elementary(ctx, 2) - ids.elementary(ctx, 2, offset=1)
        f = ev._residual_failure(t, wrong, fk)
        assert f is not None and f["path"] == "ideal"
        assert ev._residual_failure(t, wrong) is not None


def test_fock_path_rtt_rejected(std2, targets):
    with pytest.raises(ValueError):
        ev.fock_path(targets(std2, RTT, 2))


def test_current_polynomials_degree_one(std2, targets):
    t = targets(std2)
    cp = ev.current_polynomials(std2, Fraction(5), 1, target=t)
    # p_1 and e_1 coincide
    assert ev._residual_failure(t, cp["e"] - cp["p"]) is None


def test_det_central(std2, flip2, jordan10, targets):
    for s in (std2, flip2, jordan10):
        t = targets(s)
        r = ev.det_centrality_check(s, target=t, fock=ev.fock_path(t, 4))
        assert r["central"], r


def test_auxiliary_identities(std2, std3):
    for s in (std2, std3):
        r = ev.auxiliary_identities_check(s, samples=3)
        assert r["passed"], r
        assert r["sandwich_m_q_squared_rejected"]


def test_auxiliary_needs_hecke(flip2):
    with pytest.raises(ValueError):
        ev.auxiliary_identities_check(flip2)


def test_classical_yangian(flip2, targets):
    r = ev.classical_yangian_check(flip2, target=targets(flip2))
    assert r["passed"], r
    assert r["samples"] == 5


def test_classical_wrong_shift_order_fails(flip2, targets):
    # column determinant with the shifts read the wrong way round
    t = targets(flip2)
    ctx = t.context(Fraction(9, 2))
    Ls = [ctx.L(j).at(0) for j in range(2)]
    e2 = ids.elementary(ctx, 2).at(0)
    assert ev._residual_failure(t, e2 - ev._shifted_det(Ls, 2)) is None
    assert ev._residual_failure(t, e2 - ev._shifted_det(Ls[::-1], 2)) is not None


def test_classical_rejects_non_flip(std2):
    with pytest.raises(ValueError):
        ev.classical_yangian_check(std2)


def test_e_commutativity_empirical(std2, targets):
    r = ev.e_commutativity_check(std2, pairs=3, target=targets(std2))
    assert r["passed"] and r["empirical"]


# -- rtt-type Yangian --------------------------------------------------------------

def test_rtt_det_jordan_not_central(jordan10):
    r = ev.det_centrality_check(jordan10, mode=RTT)
    assert not r["central"]
    assert not r["N_scalar"]
    assert r["twisted_M_holds"]
    assert not r["twisted_N_holds"]


def test_rtt_det_standard_central(std2):
    r = ev.det_centrality_check(std2, mode=RTT)
    assert r["N_scalar"] and r["central"]


def test_rtt_ch(std2, jordan10):
    for s in (std2, jordan10):
        assert ev.identity_check(s, "rtt_ch")["passed"]


def test_rtt_ch_with_N_holds_with_identity(std2, jordan10):
    for s in (std2, jordan10):
        r = ev.rtt_ch_with_N_check(s)
        assert r["with_identity"], r
        assert not r["with_N"]


# -- abstract truncated Yangian ---------------------------------------------------

@pytest.mark.parametrize("name,k", [("chn", 1), ("chn", 2), ("newton", 1), ("newton", 2), ("det_cent", 0)])
def test_abstract_identities(std2, name, k):
    r = ev.abstract_identity_check(std2, name, k, W=3)
    assert r["passed"], r


@pytest.mark.parametrize("name,k", [("chn", 1), ("newton", 2)])
def test_abstract_identities_flip(flip2, name, k):
    r = ev.abstract_identity_check(flip2, name, k, W=3)
    assert r["passed"], r


def test_named_identity_checks(std2, targets):
    t = targets(std2)
    assert ev.chn_check(std2, 2, target=t)["passed"]
    assert ev.newton_check(std2, 2, target=t)["passed"]
    assert ev.ch_check(std2, target=t)["passed"]
