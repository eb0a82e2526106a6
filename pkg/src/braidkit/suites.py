"""Verification suites run by ``braidkit verify``.

Each suite appends records to a :class:`~braidkit.report.Report` in a fixed
order.  ``all`` runs ``core``, ``qma``, the Yangian suite matching the
symmetry's flavor, ``rtt-yangian``, ``chn`` and ``fock``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from . import baxterize as bx
from . import fock
from .ncalg import symmetric as qs
from .ncalg.oracle import BruteForceOracle, IdealOracle
from .ncalg.presentation import build_presentation, gen_matrix
from .report import NEGATIVE, POSITIVE, Report, Skip
from .scalars import ONE, Q, format_qrat
from .symmetries import (Symmetry, bc_ops, hecke_holds, load_symmetry_json, make_symmetry,
                         skew_contraction_holds, ybe_holds)
from .tensors import LinOp, conjugation_invariance_check
from .yangian import evaluation as ev
from .yangian import presentation as yp

SUITES = ("core", "qma", "yangian-hecke", "yangian-involutive", "rtt-yangian", "chn", "fock", "all")
BUILTINS = ("flip", "superflip", "standard", "jordan")


class ConfigError(ValueError):
    """Bad command-line configuration (exit status 2)."""


@dataclass(frozen=True)
class RunConfig:
    symmetry: str = "standard"
    n: int = 2
    q: str = "sym"
    a: str = "1"
    b: str = "0"
    suite: str = "core"
    truncation: int = 2
    fock_degree: int = 4
    samples: int | None = None
    seed: int = 0
    report: str | None = None

    def canonical(self) -> dict:
        out = asdict(self)
        out.pop("report")
        return out


def symmetry_from_config(cfg: RunConfig) -> Symmetry:
    s = cfg.symmetry
    if s == "flip":
        return make_symmetry("flip", N=cfg.n)
    if s == "standard":
        return make_symmetry("standard", N=cfg.n, q=cfg.q)
    if s == "jordan":
        return make_symmetry("jordan", a=cfg.a, b=cfg.b)
    if s == "superflip":
        return make_symmetry("superflip", m=int(cfg.a), n=int(cfg.b))
    return make_symmetry("custom", path=s)


# -- helpers -------------------------------------------------------------------

def _need_birank(sym: Symmetry) -> int:
    if sym.birank() is None:
        raise Skip("bi-rank is indeterminate")
    return sym.m


def _samples(cfg: RunConfig, minimum: int | None = None):
    if cfg.samples is None:
        return minimum
    return cfg.samples


# -- core ----------------------------------------------------------------------

def core_suite(sym: Symmetry, cfg: RunConfig, rep: Report) -> None:
    R, N = sym.R, sym.N
    rep.run("core.ybe", "constant braid relation R12 R23 R12 = R23 R12 R23",
            lambda: {"passed": ybe_holds(R)})
    rep.run("core.hecke", "(qI - R)(q^-1 I + R) = 0 (R^2 = I when q = 1)",
            lambda: {"passed": hecke_holds(R, sym.q), "kind": sym.kind})
    rep.run("core.skew_inverse", "skew-inverse: Tr_2 R_12 Psi_23 = P_13",
            lambda: {"passed": skew_contraction_holds(R, sym.Psi)})

    def bc():
        B, C = bc_ops(sym.Psi)
        BB, CC = B.kron(B), C.kron(C)
        return {"passed": R @ BB == BB @ R and R @ CC == CC @ R, "B": B.data, "C": C.data}
    rep.run("core.bc_commute", "B (x) B and C (x) C commute with R", bc)
    rep.run("core.r_trace_R", "Tr_R(2) R_12 = I", lambda: {"passed": R.r_trace([2], sym.C) == LinOp.identity(N)})

    def conj():
        bad = []
        for i in range(N):
            for j in range(N):
                X = LinOp.from_components(N, 1, {((i,), (j,)): ONE})
                if not conjugation_invariance_check(X, R, sym.C):
                    bad.append([i, j])
        return {"passed": not bad, "basis_size": N * N, "failing_units": bad}
    rep.run("core.conjugation", "Tr_R(2)(R^+-1 X_1 R^-+1) = Tr_R(X) I on matrix units", conj)

    def birank():
        br = sym.birank()
        return {"passed": br is not None, "birank": list(br) if br else None}
    rep.run("core.birank", "bi-rank (m|0): P^(m+1) = 0 and rank P^(m) = 1", birank)

    def constants():
        m = _need_birank(sym)
        q = sym.q
        I = LinOp.identity(N)
        trI = sym.r_trace_scalar(I) == q ** (-m) * sym.qn(m)
        bcI = sym.B @ sym.C == I.scale(q ** (-2 * m))
        P = sym.skew_symmetrizer(m)
        trP = P.r_trace(range(1, m + 1), sym.C) == q ** (-m * m)
        p24 = sym.prop24_check()
        ok = trI and bcI and trP and p24["C_on_u"] and p24["C_on_v"] and p24["C_string_P"] and p24["ladder"]
        return {"passed": ok, "m": m, "Tr_R_I": trI, "BC": bcI, "Tr_R_Pm": trP,
                "C_on_u": p24["C_on_u"], "C_on_v": p24["C_on_v"], "C_string_P": p24["C_string_P"],
                "ladder_by_k": p24["ladder_by_k"]}
    rep.run("core.trace_constants", "Tr_R I = q^-m m_q, BC = q^-2m I, Tr_R P^(m) = q^-m^2, partial-trace ladder",
            constants)

    def uv():
        _need_birank(sym)
        t = sym.uv_tensors()
        ops = sym.mn_ops(t)
        return {"passed": t.contraction() == ONE, "normalization": t.normalization,
                "u": {",".join(map(str, k)): v for k, v in sorted(t.u.items())},
                "v": {",".join(map(str, k)): v for k, v in sorted(t.v.items())},
                "M": ops.M.data, "N": ops.N.data, "M_scalar": ops.M_scalar, "N_scalar": ops.N_scalar}
    rep.run("core.uv_tensors", "P^(m) = u v with u.v = 1; operators M and N", uv)

    cr = bx.baxterize(sym)

    def ybe():
        cert = bx.certify_param_ybe(cr, seed=cfg.seed)
        return {"passed": cert.passed, "flavor": cr.flavor, "g": cr.description, "points": cert.points_checked,
                "counterexample": cert.first_failure}
    rep.run("core.param_ybe", "spectral braid relation for R(u,v) = R + g(u,v) I", ybe)

    def unitarity():
        r, _ = bx.unitarity_and_normalize(cr, seed=cfg.seed)
        return r.as_dict()
    rep.run("core.unitarity", "R(u,v)R(v,u) = phi(u,v) I and the normalized R-matrix is unitary", unitarity)

    def roundtrip():
        text = sym.dumps()
        back = load_symmetry_json(__import__("json").loads(text))
        return {"passed": back.dumps() == text and back.R == sym.R and back.q == sym.q}
    rep.run("core.json_roundtrip", "symmetry file re-loads to the same symmetry", roundtrip)


# -- constant quantum matrix algebras ------------------------------------------

def qma_suite(sym: Symmetry, cfg: RunConfig, rep: Report) -> None:
    N = sym.N
    cap = 3
    state: dict = {}

    def re_ctx():
        if "re" not in state:
            pres = build_presentation(sym, "re")
            state["re"] = (pres, IdealOracle(pres, cap), gen_matrix(pres.alphabet, "l", N))
        return state["re"]

    def rtt_ctx():
        if "rtt" not in state:
            pres = build_presentation(sym, "rtt")
            state["rtt"] = (pres, IdealOracle(pres, cap), gen_matrix(pres.alphabet, "t", N))
        return state["rtt"]

    def e_central():
        m = _need_birank(sym)
        pres, orc, L = re_ctx()
        gens = [v for _, _, v in L.nonzero()]
        out = {}
        for k in range(1, min(m, cap - 1) + 1):
            e = qs.elem_sym(sym, L, k)
            wit = [len(orc.membership(e * g - g * e).witness or []) for g in gens]
            out[f"e_{k}"] = {"central": qs.is_central(orc, e, gens), "witness_sizes": wit}
        return {"passed": all(v["central"] for v in out.values()), **out}
    rep.run("qma.e_central", "elementary symmetric polynomials are central in the RE algebra", e_central)

    def prop33():
        m = _need_birank(sym)
        if m > cap:
            raise Skip(f"m = {m} exceeds cap {cap}")
        pres, orc, L = re_ctx()
        ents = qs.prop33_entries(sym, L)
        bad = [i for i, p in enumerate(ents) if not orc.contains(p)]
        return {"passed": not bad, "entries": len(ents), "failing_entries": bad}
    rep.run("qma.skew_det", "P^(m) L_1bar...L_mbar = L_1bar...L_mbar P^(m) = q^(m^2) det(L) P^(m) in RE", prop33)

    def p3():
        pres, orc, L = re_ctx()
        x = qs.power_sum(sym, L, 3) - qs.classical_power_trace(sym, L, 3)
        return {"passed": orc.contains(x)}
    rep.run("qma.p3_classical", "p_3(L) = Tr_R L^3 modulo the RE relations", p3)

    def bethe():
        pres, orc, T = rtt_ctx()
        return qs.bethe_check(sym, orc, T)
    rep.run("qma.bethe_commute", "[p_1(T), p_2(T)] lies in the RTT ideal", bethe, holds=lambda d: d["p1_p2_commute"])
    # p_1 is central only when the RTT algebra is commutative (the flip)
    commutative = _rtt_commutative(sym, rtt_ctx())
    rep.run("qma.bethe_single", "[p_1(T), t_1^2] lies in the RTT ideal (only when the RTT algebra is commutative)",
            lambda: _bethe_single(sym, rtt_ctx()), holds=lambda d: d["member"],
            expected=POSITIVE if commutative else NEGATIVE)

    def rtt_det():
        _need_birank(sym)
        if sym.m + 1 > cap:
            raise Skip(f"m + 1 = {sym.m + 1} exceeds cap {cap}")
        pres, orc, T = rtt_ctx()
        return qs.rtt_det_centrality(sym, orc, T)
    expected = POSITIVE if sym.birank() is None or sym.mn_ops().N_scalar else NEGATIVE
    rep.run("qma.rtt_det_central", "det of the RTT algebra is central (iff N is scalar)", rtt_det,
            holds=lambda d: d["central"], expected=expected)

    def cross():
        queries = []
        _, orc_re, L = re_ctx()
        _, orc_rtt, T = rtt_ctx()
        p1 = qs.power_sum(sym, T, 1, "rtt")
        p2 = qs.power_sum(sym, T, 2, "rtt")
        queries.append(("rtt", p1 * p2 - p2 * p1))
        queries.append(("rtt", p1 * T.data[0, 1] - T.data[0, 1] * p1))
        e1 = qs.elem_sym(sym, L, 1)
        queries.append(("re", e1 * L.data[0, 1] - L.data[0, 1] * e1))
        queries.append(("re", qs.power_sum(sym, L, 3) - qs.classical_power_trace(sym, L, 3)))
        agree = []
        for kind, x in queries:
            fast = (orc_re if kind == "re" else orc_rtt).contains(x)
            slow = BruteForceOracle(orc_re.pres if kind == "re" else orc_rtt.pres, cap).contains(x)
            agree.append({"algebra": kind, "oracle": fast, "brute_force": slow})
        return {"passed": all(a["oracle"] == a["brute_force"] for a in agree), "queries": agree}
    rep.run("qma.oracle_crosscheck", "membership answers agree with a dense rank computation", cross)


def _rtt_commutative(sym, ctx) -> bool:
    pres, orc, T = ctx
    gens = [T.data[i, j] for i in range(sym.N) for j in range(sym.N)]
    return all(orc.contains(a * b - b * a) for a in gens for b in gens)


def _bethe_single(sym, ctx) -> dict:
    pres, orc, T = ctx
    p1 = qs.power_sum(sym, T, 1, "rtt")
    g = T.data[0, 1]
    return {"member": orc.contains(p1 * g - g * p1), "generator": "t[1,2]",
            "rtt_commutative": _rtt_commutative(sym, ctx)}


# -- braided Yangians ----------------------------------------------------------

_HECKE_IDENTITIES = [
    ("chn", 1, "Cayley-Hamilton-Newton identity, k=1"),
    ("chn", 2, "Cayley-Hamilton-Newton identity, k=2"),
    ("newton", 1, "Newton identity, k=1"),
    ("newton", 2, "Newton identity, k=2"),
    ("ch", 0, "Cayley-Hamilton identity"),
    ("pm_det", 0, "P^(m) L_1bar(x_{m-1})...L_mbar(x_0) = det P^(m) form"),
    ("mult_pow", 2, "quantum matrix power as R-twisted product of shifted copies, k=2"),
    ("wedge_trace", 2, "R-trace of the skew power L^wedge k is e_k, k=2"),
]

_INVOLUTIVE_IDENTITIES = [
    ("chn", 1, "Cayley-Hamilton-Newton identity (shifted), k=1"),
    ("chn", 2, "Cayley-Hamilton-Newton identity (shifted), k=2"),
    ("newton", 1, "Newton identity (shifted), k=1"),
    ("newton", 2, "Newton identity (shifted), k=2"),
    ("ch", 0, "Cayley-Hamilton identity (shifted)"),
]


def yangian_suite(sym: Symmetry, cfg: RunConfig, rep: Report, flavor: str) -> None:
    hecke = flavor == "hecke"
    if (sym.kind == "hecke") != hecke:
        raise ConfigError(f"suite yangian-{flavor} needs a {flavor} symmetry, got {sym.kind} {sym.name}")
    pre = f"yangian-{flavor}"
    K = cfg.truncation
    rep.run(f"{pre}.expansion", f"series relations and solved coefficient relations span the same space, K={K}",
            lambda: yp.expansion_equivalence_check(sym, K))
    rep.run(f"{pre}.weight_one",
            "relations on L[1] alone are those of " + ("RE (they are not)" if hecke else "mRE(1)"),
            lambda: yp.weight_one_matches_mre(sym), expected=NEGATIVE if hecke else POSITIVE)
    rep.run(f"{pre}.coproduct", "counit kills the relations; coproduct is coassociative on generators",
            lambda: yp.coproduct_counit_check(sym, min(K, 3)))
    n3 = _samples(cfg, 3)
    rep.run(f"{pre}.eval_morphism", "L(u) -> I + M/u respects the defining relations",
            lambda: ev.eval_morphism_check(sym, max(n3, 3), cfg.seed))

    state: dict = {}

    def target():
        if "t" not in state:
            m = _need_birank(sym)
            t = ev.EvalTarget(sym, yp.BRAIDED, cap=max(m + 1, 3))
            state["t"] = t
            state["fock"] = ev.fock_path(t, cfg.fock_degree)
        return state["t"], state["fock"]

    ids_list = _HECKE_IDENTITIES if hecke else _INVOLUTIVE_IDENTITIES
    for name, k, anchor in ids_list:
        def run(name=name, k=k):
            t, fk = target()
            return ev.identity_check(sym, name, k, cfg.samples, cfg.seed, target=t, fock=fk)
        rep.run(f"{pre}.{name}" + (f"_{k}" if k else ""), anchor + " (ideal and Fock paths)", run)

    def det_cent():
        t, fk = target()
        return ev.det_centrality_check(sym, cfg.samples, cfg.seed, target=t, fock=fk)
    rep.run(f"{pre}.det_central", "e_m(u) L(v) = L(v) e_m(u) (ideal and Fock paths)", det_cent,
            holds=lambda d: d["central"])

    if hecke:
        def aux():
            _need_birank(sym)
            return ev.auxiliary_identities_check(sym, max(_samples(cfg, 4), 4), cfg.seed)
        rep.run(f"{pre}.auxiliary", "q-antisymmetrizer identities behind the Hecke CHN proof", aux)
    elif sym.R == LinOp.flip(sym.N):
        rep.run(f"{pre}.classical", "flip: e_1 = tr L(u), e_N = quantum determinant of Y(gl(N))",
                lambda: ev.classical_yangian_check(sym, cfg.samples, cfg.seed))

    def ecomm():
        t, _ = target()
        return ev.e_commutativity_check(sym, max(_samples(cfg, 6), 6), cfg.seed, target=t)
    rep.run(f"{pre}.e_commute", "[e_1(u), e_2(v)] lies in the ideal at sampled pairs", ecomm, empirical=True)


def rtt_yangian_suite(sym: Symmetry, cfg: RunConfig, rep: Report) -> None:
    rep.run("rtt-yangian.coproduct", "counit and coproduct of the RTT-type Yangian on generators",
            lambda: yp.coproduct_counit_check(sym, min(cfg.truncation, 3), yp.RTT))
    n3 = _samples(cfg, 3)
    rep.run("rtt-yangian.eval_morphism", "T(u) -> T + S/u respects the RTT-type relations",
            lambda: ev.eval_morphism_check(sym, max(n3, 3), cfg.seed, mode=yp.RTT))
    state: dict = {}

    def det():
        if "d" not in state:
            _need_birank(sym)
            state["d"] = ev.det_centrality_check(sym, cfg.samples, cfg.seed, mode=yp.RTT)
        return state["d"]
    n_scalar = sym.birank() is None or sym.mn_ops().N_scalar
    rep.run("rtt-yangian.det_central", "e_m(u) is central in the RTT-type Yangian iff N is scalar", det,
            holds=lambda d: d["central"], expected=POSITIVE if n_scalar else NEGATIVE)
    rep.run("rtt-yangian.det_twisted_N", "N T(v) e_m(u) = e_m(u) T(v) N", det,
            holds=lambda d: d["twisted_N_holds"])
    rep.run("rtt-yangian.det_twisted_M", "M T(v) e_m(u) = e_m(u) T(v) M", det,
            holds=lambda d: d["twisted_M_holds"])

    def ch_with_N():
        _need_birank(sym)
        return ev.rtt_ch_with_N_check(sym, cfg.samples, cfg.seed)
    rep.run("rtt-yangian.ch_with_N", "m_q T^wedge m(u) = q^m e_m(u) N", ch_with_N)

    def ch():
        _need_birank(sym)
        return ev.identity_check(sym, "rtt_ch", 0, cfg.samples, cfg.seed)
    rep.run("rtt-yangian.ch", "Cayley-Hamilton identity for T(u) with shifts q^-2j u", ch)


def chn_suite(sym: Symmetry, cfg: RunConfig, rep: Report) -> None:
    """Identities coefficient-wise in the truncated abstract Yangian (no evaluation)."""
    W = max(cfg.truncation, 3)
    checks = [("chn", 1), ("chn", 2), ("newton", 1), ("newton", 2), ("det_cent", 0)]
    for name, k in checks:
        def run(name=name, k=k):
            _need_birank(sym)
            return ev.abstract_identity_check(sym, name, k, W)
        rep.run(f"chn.{name}" + (f"_{k}" if k else ""),
                f"{name} identity coefficient-wise up to Laurent weight {W} in the abstract Yangian", run)


def fock_suite(sym: Symmetry, cfg: RunConfig, rep: Report) -> None:
    D = cfg.fock_degree
    state: dict = {}

    def fb():
        if "fb" not in state:
            state["fb"] = fock.build_fock(sym, D)
        return state["fb"]

    def dims():
        d = fock.dimension_report(sym, D)
        return {"passed": d["agree"], **d}
    rep.run("fock.dimensions", f"graded dimensions of Sym_R(V) up to degree {D} (two independent ranks)", dims)
    rep.run("fock.ideal_preserved", "braided derivations preserve the symmetric-algebra relations",
            lambda: {"passed": fock.ideal_preserved(fb()) and fock.ideal_preserved(fb(), right=True)})
    rep.run("fock.dual_bases", "left and right dual annihilators agree via B; Sym_R(V*) relations match",
            lambda: {"passed": fock.dual_bases_agree(fb()) and fock.dual_relations_match(sym)})
    rep.run("fock.ccr", "creation/annihilation permutation relations on guarded degrees",
            lambda: fock.ccr_check(sym, D, fb()))
    rep.run("fock.mre_rep", "l_i^j -> a_i^+ a^k B_k^j represents mRE(1)", lambda: fock.mre_rep_check(sym, D, fb()))

    def evr():
        d = fock.eval_reps_check(sym)
        return {"passed": d["covariant"] and d["contravariant"], **d}
    rep.run("fock.eval_reps", "covariant and contravariant representations on V and V*", evr)
    rep.run("fock.yangian_rep", "Yangian relations hold for the bosonized evaluation image",
            lambda: fock.yangian_rep_check(sym, D, max(_samples(cfg, 3), 3), cfg.seed, fb()))
    rep.run("fock.d_stability", f"operators and relations agree at D={D} and D={D + 1}",
            lambda: fock.d_stability_check(sym, D))


def run_suite(cfg: RunConfig, sym: Symmetry | None = None) -> Report:
    if cfg.suite not in SUITES:
        raise ConfigError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES)}")
    sym = sym or symmetry_from_config(cfg)
    rep = Report(config={**cfg.canonical(), "symmetry_name": sym.name, "kind": sym.kind,
                         "q_value": "sym" if sym.q == Q else format_qrat(sym.q)})
    order = [cfg.suite] if cfg.suite != "all" else [
        "core", "qma", "yangian-hecke" if sym.kind == "hecke" else "yangian-involutive", "rtt-yangian", "chn", "fock"]
    for name in order:
        if name == "core":
            core_suite(sym, cfg, rep)
        elif name == "qma":
            qma_suite(sym, cfg, rep)
        elif name == "yangian-hecke":
            yangian_suite(sym, cfg, rep, "hecke")
        elif name == "yangian-involutive":
            yangian_suite(sym, cfg, rep, "involutive")
        elif name == "rtt-yangian":
            rtt_yangian_suite(sym, cfg, rep)
        elif name == "chn":
            chn_suite(sym, cfg, rep)
        elif name == "fock":
            fock_suite(sym, cfg, rep)
    return rep
