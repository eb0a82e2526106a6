"""Truncated R-symmetric algebra as a Fock space, and its bosonic operators.

``Sym_R(V)`` in degree ``k`` is ``V^(x)k`` modulo the span of the images of
``qI - R`` placed on neighbouring legs.  A basis vector ``x_{i1}...x_{ik}`` is
the flat index of ``(i1, ..., ik)`` (leg 1 outermost); ``R(x_i x_j) =
R_ij^kl x_k x_l`` so relation vectors are the rows of the placed operator.
Each graded component keeps an echelon form of its relations; the non-pivot
words are the chosen representatives and :meth:`FockBasis.reduce` is the
normal form.

Operators are stored block-wise as :class:`FockOp`: a degree shift and a
dense matrix (numpy object array of :class:`QRat`) from degree ``k`` to
degree ``k + shift`` for every ``k`` where both sides lie in ``0..D``.
Composition only keeps degrees where the whole chain stays inside the
truncation, so equalities are automatically restricted to the guarded range.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import linalg
from .ncalg.poly import NCPoly
from .ncalg.presentation import Presentation, build_presentation
from .scalars import ONE, ZERO, QRat, qrat
from .symmetries import Symmetry
from .tensors import LinOp, flat_index, multi_index, place_on_legs


class TruncationError(ValueError):
    """An operator was asked to leave the truncated Fock space."""


@dataclass
class FockBasis:
    sym: Symmetry
    D: int
    echelons: list = field(default_factory=list)
    reps: list = field(default_factory=list)      # reps[k] = sorted representative flat indices
    rep_pos: list = field(default_factory=list)   # rep_pos[k][flat] = position

    @property
    def N(self) -> int:
        return self.sym.N

    def dims(self) -> list[int]:
        return [len(r) for r in self.reps]

    def reduce(self, k: int, vec: dict) -> dict:
        """Normal form of a degree-``k`` tensor (sparse flat-index vector)."""
        rem, _ = self.echelons[k].reduce(vec)
        return rem

    def coords(self, k: int, vec: dict) -> list[QRat]:
        rem = self.reduce(k, vec)
        out = [ZERO] * len(self.reps[k])
        for idx, c in rem.items():
            out[self.rep_pos[k][idx]] = c
        return out

    def word(self, k: int, pos: int) -> tuple:
        return multi_index(self.reps[k][pos], self.N, k) if k else ()


def relation_rows(sym: Symmetry, k: int) -> list[dict]:
    """Spanning vectors of the degree-``k`` relation subspace."""
    if k < 2:
        return []
    X = (LinOp.identity(sym.N, 2).scale(sym.q) - sym.R)
    rows = []
    for i in range(1, k):
        data = place_on_legs(X, k, i).data
        for r in range(data.shape[0]):
            row = {c: data[r, c] for c in range(data.shape[1]) if not data[r, c].is_zero()}
            if row:
                rows.append(row)
    return rows


def build_fock(sym: Symmetry, D: int) -> FockBasis:
    if D < 2:
        raise ValueError("Fock truncation degree must be at least 2")
    fb = FockBasis(sym, D)
    N = sym.N
    for k in range(D + 1):
        E = linalg.Echelon()
        for row in relation_rows(sym, k):
            E.add(row)
        reps = [i for i in range(N ** k) if i not in E.rows]
        fb.echelons.append(E)
        fb.reps.append(reps)
        fb.rep_pos.append({r: p for p, r in enumerate(reps)})
    return fb


def brute_force_dims(sym: Symmetry, D: int) -> list[int]:
    """Dimensions by a dense fraction-free rank of the relation rows."""
    out = []
    for k in range(D + 1):
        rows = relation_rows(sym, k)
        n = sym.N ** k
        dense = [[r.get(c, ZERO) for c in range(n)] for r in rows]
        out.append(n - (linalg.rank_fraction_free(dense) if dense else 0))
    return out


# -- operators ----------------------------------------------------------------

def _zeros(r, c):
    a = np.empty((r, c), dtype=object)
    a.fill(ZERO)
    return a


def _mat_eq(a, b) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


class FockOp:
    """Block operator of fixed degree shift on the truncated Fock space."""

    def __init__(self, fb: FockBasis, shift: int, blocks: dict):
        self.fb = fb
        self.shift = shift
        self.blocks = blocks  # source degree -> matrix

    @classmethod
    def identity(cls, fb: FockBasis, c=ONE) -> "FockOp":
        c = qrat(c)
        blocks = {}
        for k, d in enumerate(fb.dims()):
            m = _zeros(d, d)
            for i in range(d):
                m[i, i] = c
            blocks[k] = m
        return cls(fb, 0, blocks)

    @property
    def domain(self) -> list[int]:
        return sorted(self.blocks)

    def __matmul__(self, other: "FockOp") -> "FockOp":
        blocks = {}
        for k, B in other.blocks.items():
            A = self.blocks.get(k + other.shift)
            if A is not None:
                blocks[k] = A.dot(B) if B.size and A.size else _zeros(A.shape[0], B.shape[1])
        return FockOp(self.fb, self.shift + other.shift, blocks)

    def _combine(self, other: "FockOp", sign: int) -> "FockOp":
        if self.shift != other.shift:
            raise ValueError("cannot add operators of different degree shift")
        blocks = {}
        for k in self.blocks.keys() & other.blocks.keys():
            blocks[k] = self.blocks[k] + other.blocks[k] if sign > 0 else self.blocks[k] - other.blocks[k]
        return FockOp(self.fb, self.shift, blocks)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, c) -> "FockOp":
        c = qrat(c)
        return FockOp(self.fb, self.shift, {k: B * c for k, B in self.blocks.items()})

    def is_zero(self) -> bool:
        return all(x.is_zero() for B in self.blocks.values() for x in B.flat)

    def equals(self, other: "FockOp") -> bool:
        common = self.blocks.keys() & other.blocks.keys()
        return self.shift == other.shift and all(_mat_eq(self.blocks[k], other.blocks[k]) for k in common)

    def restrict(self, degrees) -> "FockOp":
        return FockOp(self.fb, self.shift, {k: B for k, B in self.blocks.items() if k in set(degrees)})

    def apply(self, k: int, coords: list) -> list:
        B = self.blocks.get(k)
        if B is None:
            raise TruncationError(f"operator not defined on degree {k} (truncation D={self.fb.D})")
        return list(B.dot(np.array(coords, dtype=object))) if B.shape[1] else [ZERO] * B.shape[0]


def _from_word_map(fb: FockBasis, shift: int, degrees, f) -> FockOp:
    """Operator whose value on a representative word is the sparse tensor ``f(k, word)``."""
    blocks = {}
    for k in degrees:
        t = k + shift
        M = _zeros(len(fb.reps[t]), len(fb.reps[k]))
        for col, flat in enumerate(fb.reps[k]):
            word = multi_index(flat, fb.N, k) if k else ()
            for row, c in enumerate(fb.coords(t, f(k, word))):
                M[row, col] = c
        blocks[k] = M
    return FockOp(fb, shift, blocks)


def creation(fb: FockBasis, i: int) -> FockOp:
    """``a_i^+``: left multiplication by ``x_i``; defined on degrees ``0..D-1``."""
    N = fb.N

    def f(k, word):
        return {flat_index((i,) + word, N): ONE}

    return _from_word_map(fb, 1, range(fb.D), f)


class _Annihilator:
    """Memoised action of ``x~^i`` (or the right dual ``x^i``) on tensor words."""

    def __init__(self, sym: Symmetry, right: bool = False):
        self.sym = sym
        self.N = sym.N
        self.right = right
        qi = sym.q.inverse()
        N = self.N
        # coefficient table: (j, i) -> list of (k, l, c) with x~^i x_j -> c x_k x~^l
        self.table = {}
        if right:
            Psi = sym.Psi
            for i in range(N):
                for j in range(N):
                    self.table[j, i] = [(k, l, qi * Psi[(l, j), (k, i)]) for k in range(N) for l in range(N)
                                        if not Psi[(l, j), (k, i)].is_zero()]
            self.delta = lambda i, j: sym.B[j, i]
        else:
            Ri = sym.Rinv()
            for i in range(N):
                for j in range(N):
                    self.table[j, i] = [(k, l, qi * Ri[(j, l), (i, k)]) for k in range(N) for l in range(N)
                                        if not Ri[(j, l), (i, k)].is_zero()]
            self.delta = lambda i, j: ONE if i == j else ZERO
        self._memo = {}

    def __call__(self, i: int, word: tuple) -> dict:
        """``x~^i(word)`` as a dict ``word -> coeff`` in the tensor algebra."""
        key = (i, word)
        if key in self._memo:
            return self._memo[key]
        out: dict = {}
        if word:
            j, rest = word[0], word[1:]
            d = self.delta(i, j)
            if not d.is_zero():
                out[rest] = d
            for k, l, c in self.table[j, i]:
                for w, a in self(l, rest).items():
                    ww = (k,) + w
                    t = out.get(ww, ZERO) + c * a
                    if t.is_zero():
                        out.pop(ww, None)
                    else:
                        out[ww] = t
        self._memo[key] = out
        return out


def annihilation(fb: FockBasis, i: int, right: bool = False, _cache={}) -> FockOp:
    """``a^i = x~^i`` (left dual basis); ``right=True`` gives the right dual ``x^i``."""
    key = (id(fb), right)
    ann = _cache.get(key)
    if ann is None or ann.sym is not fb.sym:
        ann = _cache[key] = _Annihilator(fb.sym, right)
    N = fb.N

    def f(k, word):
        return {flat_index(w, N) if w else 0: c for w, c in ann(i, word).items()}

    return _from_word_map(fb, -1, range(1, fb.D + 1), f)


def ideal_preserved(fb: FockBasis, right: bool = False) -> bool:
    """The annihilators send every relation vector of degree ``k`` into the relations of degree ``k-1``."""
    ann = _Annihilator(fb.sym, right)
    N = fb.N
    for k in range(2, fb.D + 1):
        for row in relation_rows(fb.sym, k):
            for i in range(N):
                acc: dict = {}
                for flat, c in row.items():
                    for w, a in ann(i, multi_index(flat, N, k)).items():
                        idx = flat_index(w, N)
                        linalg.axpy(acc, c * a, {idx: ONE})
                if fb.reduce(k - 1, acc):
                    return False
    return True


class Bosons:
    """Creation and annihilation operators for one Fock basis (built once)."""

    def __init__(self, fb: FockBasis):
        self.fb = fb
        N = fb.N
        self.plus = [creation(fb, i) for i in range(N)]
        self.minus = [annihilation(fb, i) for i in range(N)]
        self._rho = None

    def rho(self) -> list[list[FockOp]]:
        """``rho(l_i^j) = a_i^+ a^k B_k^j``."""
        if self._rho is None:
            sym, N = self.fb.sym, self.fb.N
            out = []
            for i in range(N):
                row = []
                for j in range(N):
                    acc = None
                    for k in range(N):
                        b = sym.B[k, j]
                        if b.is_zero():
                            continue
                        t = (self.plus[i] @ self.minus[k]).scale(b)
                        acc = t if acc is None else acc + t
                    row.append(acc if acc is not None else FockOp.identity(self.fb, ZERO))
                out.append(row)
            self._rho = out
        return self._rho


# -- checks ---------------------------------------------------------------------

def dimension_report(sym: Symmetry, D: int) -> dict:
    fb = build_fock(sym, D)
    dims = fb.dims()
    bf = brute_force_dims(sym, D)
    return {"dims": dims, "brute_force": bf, "agree": dims == bf}


def ccr_check(sym: Symmetry, D: int, fb: FockBasis | None = None) -> dict:
    """The three permutation families between creation and annihilation operators.

    Guarded ranges come out of block composition: family 1 lives on degrees
    ``<= D-2``, family 2 on ``2..D``, family 3 on ``1..D-1``; on degree 0
    family 3 is the vacuum rule ``a^j a_i^+ (1) = delta``, checked separately.
    """
    if D < 3:
        raise ValueError("CCR check needs D >= 3")
    fb = fb or build_fock(sym, D)
    bos = Bosons(fb)
    ap, am = bos.plus, bos.minus
    R, Ri, q, N = sym.R, sym.Rinv(), sym.q, sym.N
    qi = q.inverse()
    fam = {"creation": True, "annihilation": True, "mixed": True}
    ranges = {}
    for i in range(N):
        for j in range(N):
            lhs = (ap[i] @ ap[j]).scale(q)
            rhs = None
            for k in range(N):
                for l in range(N):
                    c = R[(i, j), (k, l)]
                    if not c.is_zero():
                        t = (ap[k] @ ap[l]).scale(c)
                        rhs = t if rhs is None else rhs + t
            fam["creation"] &= lhs.equals(rhs)
            ranges["creation"] = lhs.domain

            lhs = (am[i] @ am[j]).scale(q)
            rhs = None
            for k in range(N):
                for l in range(N):
                    c = R[(l, k), (j, i)]
                    if not c.is_zero():
                        t = (am[k] @ am[l]).scale(c)
                        rhs = t if rhs is None else rhs + t
            fam["annihilation"] &= (lhs.is_zero() if rhs is None else lhs.equals(rhs))
            ranges["annihilation"] = lhs.domain

            # a^j a_i^+ - q^-1 (R^-1)_{ik}^{jl} a_l^+ a^k = delta_i^j
            lhs = am[j] @ ap[i]
            for k in range(N):
                for l in range(N):
                    c = Ri[(i, k), (j, l)]
                    if not c.is_zero():
                        lhs = lhs - (ap[l] @ am[k]).scale(qi * c)
            target = FockOp.identity(fb, ONE if i == j else ZERO)
            fam["mixed"] &= lhs.equals(target)
            ranges["mixed"] = lhs.domain
    basics = _vacuum_basics(fb, bos)
    return {"passed": all(fam.values()) and basics, **fam, "vacuum_rules": basics, "guarded_degrees": ranges}


def _vacuum_basics(fb: FockBasis, bos: Bosons) -> bool:
    """``a^j(1) = 0``, ``a^j(x_i) = delta``, ``a^j a_i^+ (1) = delta``."""
    N = fb.N
    ok = True
    for j in range(N):
        ok &= 0 not in bos.minus[j].blocks  # no degree-0 block: a^j(vacuum) = 0 by construction
        for i in range(N):
            img = bos.minus[j].apply(1, fb.coords(1, {i: ONE}))
            ok &= img == [ONE if i == j else ZERO]
            img = (bos.minus[j] @ bos.plus[i]).apply(0, [ONE])
            ok &= img == [ONE if i == j else ZERO]
    return ok


def dual_bases_agree(fb: FockBasis) -> bool:
    """Right-dual annihilators equal ``x~^k B_k^i``."""
    sym, N = fb.sym, fb.N
    left = [annihilation(fb, i) for i in range(N)]
    ok = True
    for i in range(N):
        right = annihilation(fb, i, right=True)
        acc = None
        for k in range(N):
            b = sym.B[k, i]
            if not b.is_zero():
                t = left[k].scale(b)
                acc = t if acc is None else acc + t
        ok &= right.equals(acc)
    return ok


def dual_relations_match(sym: Symmetry) -> bool:
    """The degree-2 relations of ``Sym_R(V*)`` in the right and left dual bases agree.

    Right basis: ``q x^i x^j - R_lk^ji x^k x^l``.  Substituting
    ``x^i = x~^k B_k^i`` must map that span onto the same formula in ``x~``.
    """
    N = sym.N
    R, B, q = sym.R, sym.B, sym.q

    def rel_rows():
        rows = []
        for i in range(N):
            for j in range(N):
                row = {flat_index((i, j), N): q}
                for k in range(N):
                    for l in range(N):
                        c = R[(l, k), (j, i)]
                        if not c.is_zero():
                            linalg.axpy(row, -c, {flat_index((k, l), N): ONE})
                rows.append(row)
        return rows

    base = rel_rows()
    mapped = []
    for row in base:
        out: dict = {}
        for flat, c in row.items():
            a, b = multi_index(flat, N, 2)
            # x^a x^b = x~^k x~^l B_k^a B_l^b
            for k in range(N):
                for l in range(N):
                    w = B[k, a] * B[l, b]
                    if not w.is_zero():
                        linalg.axpy(out, c * w, {flat_index((k, l), N): ONE})
        mapped.append(out)
    E1, E2, E3 = linalg.Echelon(), linalg.Echelon(), linalg.Echelon()
    for r in base:
        E1.add(r)
        E3.add(r)
    for r in mapped:
        E2.add(r)
        E3.add(r)
    return E1.rank == E2.rank == E3.rank


class FockRep:
    """A representation of an algebra with generators ``l[i,j]`` on the Fock space."""

    def __init__(self, fb: FockBasis, images: dict):
        self.fb = fb
        self.images = images  # generator index -> FockOp
        self._memo: dict = {}

    def word(self, w: tuple) -> FockOp:
        if w in self._memo:
            return self._memo[w]
        if not w:
            op = FockOp.identity(self.fb)
        else:
            op = self.images[w[0]] @ self.word(w[1:])
        self._memo[w] = op
        return op

    def represent(self, p: NCPoly) -> FockOp:
        acc = FockOp.identity(self.fb, ZERO)
        for w, c in p.terms.items():
            acc = acc + self.word(w).scale(c)
        return acc


def bosonic_rep(fb: FockBasis, alphabet, shift=ZERO, scale=ONE, name: str = "l") -> FockRep:
    """``l[i,j] -> scale * a_i^+ a^k B_k^j + shift * delta_ij``."""
    rho = Bosons(fb).rho()
    N = fb.N
    shift, scale = qrat(shift), qrat(scale)
    images = {}
    for i in range(N):
        for j in range(N):
            op = rho[i][j].scale(scale)
            if i == j and not shift.is_zero():
                op = op + FockOp.identity(fb, shift)
            images[alphabet.index[f"{name}[{i + 1},{j + 1}]"]] = op
    return FockRep(fb, images)


def mre_rep_check(sym: Symmetry, D: int, fb: FockBasis | None = None) -> dict:
    """Every mre(1) relation vanishes under ``l_i^j -> a_i^+ a^k B_k^j``."""
    fb = fb or build_fock(sym, D)
    pres = build_presentation(sym, "mre", h=1)
    rep = bosonic_rep(fb, pres.alphabet)
    bad = [idx for idx, r in enumerate(pres.relations) if not rep.represent(r).is_zero()]
    return {"passed": not bad, "relations": len(pres.relations), "failures": bad, "degrees": list(range(D + 1))}


def eval_reps(sym: Symmetry) -> tuple[dict, dict]:
    """Covariant rep on ``V`` and contravariant rep on ``V*`` of mre(1).

    Covariant: ``l_i^j(x_k) = x_i B_k^j``.  Contravariant:
    ``l_i^j(x^l) = -R_ki^lj x^k``.  Returns generator-label -> matrix
    (column = input basis vector).
    """
    N = sym.N
    cov, contra = {}, {}
    for i in range(N):
        for j in range(N):
            m = _zeros(N, N)
            for k in range(N):
                m[i, k] = sym.B[k, j]
            cov[f"l[{i + 1},{j + 1}]"] = m
            c = _zeros(N, N)
            for l in range(N):
                for k in range(N):
                    c[k, l] = -sym.R[(k, i), (l, j)]
            contra[f"l[{i + 1},{j + 1}]"] = c
    return cov, contra


def _matrix_rep_zero(pres: Presentation, mats: dict, N: int) -> bool:
    by_index = {pres.alphabet.index[k]: v for k, v in mats.items()}
    for r in pres.relations:
        acc = _zeros(N, N)
        for w, c in r.terms.items():
            m = np.identity(N, dtype=object) * ONE
            for g in w:
                m = m.dot(by_index[g])
            acc = acc + m * c
        if not all(x.is_zero() for x in acc.flat):
            return False
    return True


def eval_reps_check(sym: Symmetry) -> dict:
    pres = build_presentation(sym, "mre", h=1)
    cov, contra = eval_reps(sym)
    return {"covariant": _matrix_rep_zero(pres, cov, sym.N), "contravariant": _matrix_rep_zero(pres, contra, sym.N)}


def hecke_shift(sym: Symmetry) -> QRat:
    """``-1/(q - q^-1)``: the scalar added to ``a^+ a B`` to land in the RE algebra.

    ``a^+ a B`` satisfies mre(1); ``L = L' + c I`` turns mre(1) into RE exactly
    when ``c (q - q^-1) = -1``.
    """
    if sym.kind != "hecke":
        return ZERO
    h = sym.q - sym.q.inverse()
    if h.is_zero():
        raise ZeroDivisionError("q - q^-1 vanishes")
    return -h.inverse()


# variant -> (scale, shift) as functions of h = q - q^-1
_HECKE_VARIANTS = {
    "standard": lambda h: (ONE, -h.inverse()),
    "renormalized": lambda h: (h, -ONE),
    "printed_sign": lambda h: (ONE, h.inverse()),
    "printed_renormalized": lambda h: (h, ONE),
}


def eval_image_rep(sym: Symmetry, fb: FockBasis, alphabet, variant: str = "standard") -> FockRep:
    """Fock representation of the evaluation target (mre(1) or re).

    For a Hecke symmetry ``variant`` picks the affine map applied to
    ``a^+ a B``: ``standard`` is ``- I/(q - q^-1)``, ``renormalized`` is
    ``(q - q^-1) a^+ a B - I``; the ``printed_*`` variants carry the opposite
    sign of the identity term and are kept to document that they fail.
    """
    if sym.kind != "hecke":
        return bosonic_rep(fb, alphabet)
    h = sym.q - sym.q.inverse()
    if h.is_zero():
        raise ZeroDivisionError("q - q^-1 vanishes")
    scale, shift = _HECKE_VARIANTS[variant](h)
    return bosonic_rep(fb, alphabet, shift=shift, scale=scale)


def yangian_rep_check(sym: Symmetry, D: int, samples: int = 3, seed: int = 0, fb: FockBasis | None = None) -> dict:
    """Series-form Yangian relations as operator identities at a grid of ``(u0, v0)``.

    The cleared relation has bidegree ``<= (2, 2)``, so a ``3 x 3`` grid
    certifies it.  Hecke symmetries are run through all variants of
    :func:`eval_image_rep`; ``passed`` needs the two correct ones to hold and
    the two ``printed_*`` ones to fail.
    """
    from .yangian.evaluation import EvalTarget, _grid, series_relation_at

    if D < 3:
        raise ValueError("Yangian rep check needs D >= 3")
    if samples < 3:
        raise ValueError("at least 3 points per variable are needed (bidegree 2)")
    fb = fb or build_fock(sym, D)
    target = EvalTarget(sym, "braided", cap=2)
    variants = list(_HECKE_VARIANTS) if sym.kind == "hecke" else ["standard"]
    us, vs = _grid(sym, samples, samples, seed)
    rels = [(u0, v0, series_relation_at(target, u0, v0)) for u0 in us for v0 in vs]
    out = {"pairs": len(rels), "degrees": list(range(D + 1)), "variants": {}}
    for var in variants:
        rep = eval_image_rep(sym, fb, target.pres.alphabet, var)
        fail = None
        for u0, v0, X in rels:
            for idx, p in enumerate(X.data.flat):
                if p and not rep.represent(p).is_zero():
                    fail = {"u0": str(u0), "v0": str(v0), "entry": idx}
                    break
            if fail:
                break
        target_ok = all(rep.represent(r).is_zero() for r in target.pres.relations)
        out["variants"][var] = {"holds": fail is None, "target_relations": target_ok, "first_failure": fail}
    v = out["variants"]
    good = all(v[k]["holds"] and v[k]["target_relations"] for k in v if not k.startswith("printed"))
    printed_fail = all(not v[k]["holds"] for k in v if k.startswith("printed"))
    out["passed"] = good and printed_fail
    return out


def d_stability_check(sym: Symmetry, D: int) -> dict:
    """Operators built at ``D`` and ``D + 1`` agree on every common degree."""
    a, b = build_fock(sym, D), build_fock(sym, D + 1)
    same_basis = a.reps == b.reps[: D + 1]
    ba, bb = Bosons(a), Bosons(b)
    ops = True
    for i in range(sym.N):
        for X, Y in ((ba.plus[i], bb.plus[i]), (ba.minus[i], bb.minus[i])):
            ops &= X.equals(Y)
        for j in range(sym.N):
            ops &= ba.rho()[i][j].equals(bb.rho()[i][j])
    ra, rb = ccr_check(sym, D, a), ccr_check(sym, D + 1, b)
    keys = ("creation", "annihilation", "mixed")
    return {"passed": same_basis and ops and all(ra[k] == rb[k] for k in keys),
            "basis": same_basis, "operators": ops, "ccr_D": {k: ra[k] for k in keys},
            "ccr_D_plus_1": {k: rb[k] for k in keys}}
