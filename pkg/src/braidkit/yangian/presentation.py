"""Truncated Yangians on Laurent coefficients.

``L(u) = sum_k L[k] u^-k``.  In braided mode ``L[0] = I`` and the generators
are ``l[i,j;k]`` for ``1 <= k <= K``; in rtt-type mode ``T[0]`` is generic and
the generators are ``t[i,j;k]`` for ``0 <= k <= K``.  Generator ``l[i,j;k]``
has Laurent weight ``k``.

Both braided flavours are written with ``[A, B]_R = R A_1bar B_2bar -
B_1bar A_2bar R``.  The current relation multiplied by ``u - v`` reads::

    (u - v) [L(u), L(v)]_R = c(u) (L_1bar(u) L_2bar(v) - L_1bar(v) L_2bar(u))

with ``c(u) = 1`` for an involutive symmetry and ``c(u) = (q - q^-1) u`` for a
Hecke one.  The rtt-type relation is
``((u-v)R - c(u)) T_1(u) T_2(v) = T_1(v) T_2(u) ((u-v)R - c(u))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import linalg
from ..ncalg.poly import Alphabet, NCPoly
from ..ncalg.presentation import Presentation, barred, entries, plain
from ..scalars import QRat
from ..symmetries import Symmetry
from ..tensors import LinOp, MatOverAlg

BRAIDED = "braided"
RTT = "rtt"


def coefficient_labels(name: str, N: int, k: int) -> list[str]:
    return [f"{name}[{i + 1},{j + 1};{k}]" for i in range(N) for j in range(N)]


@dataclass
class YangianPresentation:
    sym: Symmetry
    K: int
    mode: str
    presentation: Presentation
    coeffs: list  # coeffs[k] is L[k] (LinOp identity at k = 0 in braided mode)
    labels: dict = field(default_factory=dict)  # relation index -> (r, s)

    @property
    def alphabet(self) -> Alphabet:
        return self.presentation.alphabet

    @property
    def flavor(self) -> str:
        return "hecke" if self.sym.kind == "hecke" else "involutive"

    def weight(self, p: NCPoly) -> int:
        return p.weight(self.alphabet.weight_map())


def _alphabet(N: int, K: int, mode: str):
    name = "l" if mode == BRAIDED else "t"
    start = 1 if mode == BRAIDED else 0
    labels, weights = [], []
    for k in range(start, K + 1):
        labels += coefficient_labels(name, N, k)
        weights += [k] * (N * N)
    A = Alphabet(labels, weights)
    coeffs = []
    for k in range(0, K + 1):
        if k < start:
            coeffs.append(LinOp.identity(N, 1))
            continue
        M = MatOverAlg.zeros(N, 1)
        for i in range(N):
            for j in range(N):
                M.data[i, j] = A.gen(f"{name}[{i + 1},{j + 1};{k}]")
        coeffs.append(M)
    return A, coeffs


class _Copies:
    """Cached two-leg copies of each Laurent coefficient."""

    def __init__(self, sym, coeffs, mode):
        self.sym = sym
        self.mode = mode
        self.c = coeffs
        self._cache = {}

    def __call__(self, k: int, leg: int):
        key = (k, leg)
        if key not in self._cache:
            X = self.c[k]
            if isinstance(X, LinOp):
                X = MatOverAlg.from_linop(X)
            cp = barred(self.sym, X, 2) if self.mode == BRAIDED else plain(X, 2)
            self._cache[(k, 1)], self._cache[(k, 2)] = cp
        return self._cache[key]


def r_bracket(sym: Symmetry, cp: _Copies, r: int, s: int) -> MatOverAlg:
    return sym.R @ cp(r, 1) @ cp(s, 2) - cp(s, 1) @ cp(r, 2) @ sym.R


def coefficient_relation(sym: Symmetry, cp: _Copies, r: int, s: int) -> MatOverAlg:
    """The ``(r, s)`` relation in solved form, as ``lhs - rhs``."""
    out = r_bracket(sym, cp, r, s)
    if sym.kind == "hecke":
        h = sym.q - sym.q.inverse()
        for a in range(0, min(r, s - 1) + 1):
            out = out - (cp(a, 1) @ cp(r + s - a, 2) - cp(r + s - a, 1) @ cp(a, 2)).scale(h)
    else:
        for a in range(1, min(r, s) + 1):
            out = out - (cp(a - 1, 1) @ cp(r + s - a, 2) - cp(r + s - a, 1) @ cp(a - 1, 2))
    return out


def series_relations(sym: Symmetry, K: int, mode: str = BRAIDED) -> dict[int, list[NCPoly]]:
    """Coefficients of the current relation, grouped by top Laurent weight.

    The coefficient of ``u^-a v^-b`` involves ``L`` indices up to
    ``a + b + 1``; only coefficients whose indices all stay ``<= K`` are kept.
    """
    A, coeffs = _alphabet(sym.N, K, mode)
    cp = _Copies(sym, coeffs, mode)
    hecke = sym.kind == "hecke"
    h = sym.q - sym.q.inverse() if hecke else None
    R = sym.R
    out: dict[int, list[NCPoly]] = {}
    lo = 0 if mode == BRAIDED else -1
    for a in range(lo, K + 1):
        for b in range(lo, K + 1):
            w = a + b + 1
            if w > K or a + 1 > K or b + 1 > K:
                continue

            def get(k, leg):
                return cp(k, leg) if 0 <= k <= K else None

            terms = []
            if mode == BRAIDED:
                # (u - v)[L(u), L(v)]_R at u^-a v^-b
                for (r, s), sign in (((a + 1, b), 1), ((a, b + 1), -1)):
                    if r >= 0 and s >= 0:
                        terms.append(r_bracket(sym, cp, r, s).scale(QRat(sign)))
                # c(u)(L1(u)L2(v) - L1(v)L2(u)) at u^-a v^-b
                ra = a + 1 if hecke else a
                if ra >= 0 and b >= 0:
                    X = cp(ra, 1) @ cp(b, 2) - cp(b, 1) @ cp(ra, 2)
                    terms.append(-(X.scale(h) if hecke else X))
            else:
                # ((u-v)R - c(u)) T1(u) T2(v) - T1(v) T2(u) ((u-v)R - c(u))
                for r, s, sgn in ((a + 1, b, 1), (a, b + 1, -1)):
                    if r >= 0 and s >= 0:
                        terms.append((R @ cp(r, 1) @ cp(s, 2)).scale(QRat(sgn)))
                for s_, r_, sgn in ((b, a + 1, 1), (b + 1, a, -1)):
                    # T1(v) T2(u) (u - v) R: u^1 multiplies T2(u) coefficient r_
                    if r_ >= 0 and s_ >= 0:
                        terms.append(-(cp(s_, 1) @ cp(r_, 2) @ R).scale(QRat(sgn)))
                ra = a + 1 if hecke else a
                if ra >= 0 and b >= 0:
                    X = cp(ra, 1) @ cp(b, 2)
                    Y = cp(b, 1) @ cp(ra, 2)
                    terms.append(-(X.scale(h) if hecke else X))
                    terms.append(Y.scale(h) if hecke else Y)
            if not terms:
                continue
            X = terms[0]
            for t in terms[1:]:
                X = X + t
            rels = entries(X)
            if rels:
                out.setdefault(w, []).extend(rels)
    return out


def build_yangian(sym: Symmetry, K: int, mode: str = BRAIDED) -> YangianPresentation:
    """Defining relations with every Laurent weight ``<= K``.

    Braided mode emits the solved coefficient system ``[L[r], L[s]]_R = ...``
    (``r, s >= 1`` involutive; ``r >= 0, s >= 1`` Hecke, where ``r = 0`` is
    identically zero and dropped).  The involutive system is filtered (its
    right side has weight ``r + s - 1``); the Hecke system is homogeneous.
    Rtt-type mode emits the series coefficients directly.
    """
    if K < 1:
        raise ValueError("truncation K must be at least 1")
    if mode not in (BRAIDED, RTT):
        raise ValueError(f"unknown Yangian mode {mode!r}")
    A, coeffs = _alphabet(sym.N, K, mode)
    rels: list[NCPoly] = []
    labels = {}
    if mode == BRAIDED:
        cp = _Copies(sym, coeffs, mode)
        r0 = 0 if sym.kind == "hecke" else 1
        for r in range(r0, K + 1):
            for s in range(1, K + 1 - r):
                for e in entries(coefficient_relation(sym, cp, r, s)):
                    labels[len(rels)] = (r, s)
                    rels.append(e)
    else:
        for w, rs in sorted(series_relations(sym, K, RTT).items()):
            for e in rs:
                labels[len(rels)] = ("series", w)
                rels.append(e)
    kind = f"yangian-{'hecke' if sym.kind == 'hecke' else 'involutive'}" if mode == BRAIDED else "rtt-yangian"
    pres = Presentation(A, rels, kind, sym.N, {"K": K, "mode": mode})
    yp = YangianPresentation(sym, K, mode, pres, coeffs, labels)
    if mode == BRAIDED:
        homog = pres.is_homogeneous()
        if homog != (sym.kind == "hecke"):
            raise AssertionError("unexpected weight structure of the coefficient relations")
    return yp


def _span_rank(polys, cols) -> linalg.Echelon:
    E = linalg.Echelon()
    for p in polys:
        E.add({cols.setdefault(w, len(cols)): c for w, c in p.terms.items()})
    return E


def expansion_equivalence_check(sym: Symmetry, K: int) -> dict:
    """Compare the solved coefficient system with the raw series coefficients.

    For each top weight ``w <= K`` the span of the series coefficients of top
    weight ``w`` must equal the span of the solved relations with ``r + s = w``.
    """
    if K > 4:
        raise ValueError("expansion check is limited to K <= 4")
    yp = build_yangian(sym, K, BRAIDED)
    series = series_relations(sym, K, BRAIDED)
    per_weight = {}
    ok = True
    for w in range(1, K + 1):
        solved = [p for i, p in enumerate(yp.presentation.relations) if sum(yp.labels[i]) == w]
        raw = series.get(w, [])
        cols: dict = {}
        Es, Er, Eu = _span_rank(solved, cols), _span_rank(raw, cols), _span_rank(solved + raw, cols)
        agree = Es.rank == Er.rank == Eu.rank
        ok = ok and agree
        per_weight[w] = {"solved_rank": Es.rank, "series_rank": Er.rank, "union_rank": Eu.rank, "agree": agree}
    rtt_lin = [p for rs in series_relations(sym, K, RTT).values() for p in rs if any(len(wd) == 1 for wd in p.terms)]
    return {"passed": ok, "per_weight": per_weight, "rtt_linear_relations": len(rtt_lin)}


def weight_one_matches_mre(sym: Symmetry) -> dict:
    """The relations on ``L[1]`` alone against the mre(1) (involutive) or re (Hecke) relations."""
    from ..ncalg.presentation import build_presentation

    yp = build_yangian(sym, 2, BRAIDED)
    own = [p for i, p in enumerate(yp.presentation.relations) if yp.labels[i] == (1, 1)]
    target = build_presentation(sym, "mre" if sym.kind != "hecke" else "re", h=1)
    # relabel l[i,j] -> l[i,j;1]
    relabel = {target.alphabet.index[lab]: yp.alphabet.index[lab[:-1] + ";1]"] for lab in target.alphabet.labels}
    mapped = [NCPoly({tuple(relabel[g] for g in w): c for w, c in p.terms.items()}) for p in target.relations]
    cols: dict = {}
    a, b, u = _span_rank(own, cols), _span_rank(mapped, cols), _span_rank(own + mapped, cols)
    return {"passed": a.rank == b.rank == u.rank, "yangian_rank": a.rank, "target_rank": b.rank, "union_rank": u.rank}


# -- coproduct and counit on generators ---------------------------------------

def _pair_alphabet(yp: YangianPresentation, copies: int) -> Alphabet:
    labels = [f"{lab}@{c}" for c in range(copies) for lab in yp.alphabet.labels]
    return Alphabet(labels)


def counit(yp: YangianPresentation, p: NCPoly) -> QRat:
    """``eps(l_i^j[k]) = delta_k0 delta_ij``: every braided generator has ``k >= 1``, every
    rtt generator ``t[i,j;0]`` maps to ``delta_ij``."""
    vals = {}
    for idx, lab in enumerate(yp.alphabet.labels):
        ij, k = lab[2:-1].split(";")
        i, j = ij.split(",")
        vals[idx] = QRat(1 if (int(k) == 0 and i == j) else 0)
    out = QRat(0)
    for w, c in p.terms.items():
        t = c
        for g in w:
            t = t * vals[g]
            if t.is_zero():
                break
        out = out + t
    return out


def coproduct_counit_check(sym: Symmetry, K: int, mode: str = BRAIDED) -> dict:
    """Generator-level bialgebra axioms.

    ``Delta(L[m]) = sum_k L[k] (.) L[m-k]`` where ``(.)`` is the matrix
    product with tensor-product entries; tensors are encoded as tuples of
    coefficient indices.  Checks that the counit kills every defining
    relation, the counit axioms, and coassociativity.
    """
    if K > 3:
        raise ValueError("coproduct check is limited to K <= 3")
    yp = build_yangian(sym, K, mode)
    N = sym.N
    eps_ok = all(counit(yp, r).is_zero() for r in yp.presentation.relations)

    # entries of L[k] as symbols: ("e", i, j, k); identity for braided k=0
    def entry(k, i, j):
        if mode == BRAIDED and k == 0:
            return None if i != j else "1"
        return (i, j, k)

    def eps(sym_):
        if sym_ == "1":
            return 1
        if sym_ is None:
            return 0
        i, j, k = sym_
        return 1 if (k == 0 and i == j) else 0

    def delta(i, j, m):
        """dict {(left, right): coeff} for Delta(l_i^j[m])."""
        out = {}
        for k in range(m + 1):
            for a in range(N):
                x, y = entry(k, i, a), entry(m - k, a, j)
                if x is None or y is None:
                    continue
                out[(x, y)] = out.get((x, y), 0) + 1
        return out

    def lift(sym_, side_delta):
        """Apply Delta to a single tensor factor symbol."""
        if sym_ == "1":
            return {("1", "1"): 1}
        i, j, k = sym_
        return side_delta(i, j, k)

    counit_ok = True
    coassoc_ok = True
    kmin = 1 if mode == BRAIDED else 0
    for m in range(kmin, K + 1):
        for i in range(N):
            for j in range(N):
                D = delta(i, j, m)
                left, right = {}, {}
                for (x, y), c in D.items():
                    ex, ey = eps(x), eps(y)
                    if ex:
                        left[y] = left.get(y, 0) + c * ex
                    if ey:
                        right[x] = right.get(x, 0) + c * ey
                target = {entry(m, i, j): 1}
                clean = lambda d: {k: v for k, v in d.items() if v}
                counit_ok &= clean(left) == target == clean(right)
                lhs, rhs = {}, {}
                for (x, y), c in D.items():
                    for (x1, x2), c1 in lift(x, delta).items():
                        key = (x1, x2, y)
                        lhs[key] = lhs.get(key, 0) + c * c1
                    for (y1, y2), c2 in lift(y, delta).items():
                        key = (x, y1, y2)
                        rhs[key] = rhs.get(key, 0) + c * c2
                coassoc_ok &= clean(lhs) == clean(rhs)
    return {
        "passed": eps_ok and counit_ok and coassoc_ok,
        "counit_kills_relations": eps_ok,
        "counit_axiom": counit_ok,
        "coassociative": coassoc_ok,
        "relations": len(yp.presentation.relations),
    }
