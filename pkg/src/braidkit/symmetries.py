"""Constant braidings: constructors, validation and derived operators.

A :class:`Symmetry` wraps a two-leg :class:`~braidkit.tensors.LinOp` ``R``
that satisfies the braid relation and the Hecke condition
``(qI - R)(q^-1 I + R) = 0`` (``R^2 = I`` when ``q = 1``).  Construction
computes the skew-inverse ``Psi`` and the one-leg operators ``B`` and ``C``
and rejects anything that fails a check.  Skew-symmetrizers, the bi-rank,
the ``u``/``v`` tensors and the ``M``/``N`` operators are computed lazily.

``u``/``v`` normalization: the image of the top skew-symmetrizer is spanned
by ``v``; we scale ``v`` so that its first nonzero component (lexicographic
multi-index order) is ``-1/2`` when ``m = N = 2`` and ``1`` otherwise, and
then ``u`` is fixed by ``P^(m)[i, j] = u_i v^j``.  ``M`` and ``N`` do not
depend on this choice.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import linalg
from .scalars import ONE, Q, ZERO, QRat, format_qrat, parse, qfact, qnum, qrat
from .tensors import LinOp, flat_index, multi_index, place_on_legs


class SymmetryError(ValueError):
    """A candidate braiding failed one of the construction checks."""


# -- checks -----------------------------------------------------------------

def ybe_holds(R: LinOp) -> bool:
    R1 = place_on_legs(R, 3, 1)
    R2 = place_on_legs(R, 3, 2)
    return R1 @ R2 @ R1 == R2 @ R1 @ R2


def hecke_holds(R: LinOp, q: QRat) -> bool:
    I = LinOp.identity(R.N, 2)
    return ((I.scale(q) - R) @ (I.scale(q.inverse()) + R)).is_zero()


def skew_inverse(R: LinOp) -> LinOp:
    """Solve ``R_ij^kl Psi_lp^jq = delta_i^q delta_p^k`` for ``Psi``.

    The N^4 equations split into one N^2 x N^2 system: with
    ``A[(i,k),(l,j)] = R_ij^kl`` the unknowns ``X[(l,j),(q,p)] = Psi_lp^jq``
    satisfy ``A X = I``.
    """
    N = R.N
    idx = [(a, b) for a in range(N) for b in range(N)]
    A = [[R[(i, j), (k, l)] for (l, j) in idx] for (i, k) in idx]
    try:
        X = linalg.inverse(A)
    except ZeroDivisionError:
        raise SymmetryError("not skew-invertible") from None
    comps = {}
    for r, (l, j) in enumerate(idx):
        for c, (qq, p) in enumerate(idx):
            if X[r][c]:
                comps[((l, p), (j, qq))] = X[r][c]
    return LinOp.from_components(N, 2, comps)


def skew_contraction_holds(R: LinOp, Psi: LinOp) -> bool:
    """``Tr_2 R_12 Psi_23 = P_13`` by direct index contraction."""
    N = R.N
    r = range(N)
    for i in r:
        for k in r:
            for p in r:
                for qq in r:
                    s = ZERO
                    for j in r:
                        for l in r:
                            a = R[(i, j), (k, l)]
                            if a:
                                s = s + a * Psi[(l, p), (j, qq)]
                    want = ONE if (i == qq and p == k) else ZERO
                    if s != want:
                        return False
    return True


def bc_ops(Psi: LinOp) -> tuple[LinOp, LinOp]:
    """``B = Tr_1 Psi`` and ``C = Tr_2 Psi``."""
    return Psi.partial_trace(1), Psi.partial_trace(2)


# -- the symmetry object ------------------------------------------------------

@dataclass(frozen=True)
class UVTensors:
    m: int
    u: dict  # multi-index -> QRat, lower indices
    v: dict  # multi-index -> QRat, upper indices
    normalization: str

    def contraction(self) -> QRat:
        out = ZERO
        for k, a in self.u.items():
            b = self.v.get(k)
            if b is not None:
                out = out + a * b
        return out

    def rescaled(self, lam) -> "UVTensors":
        lam = qrat(lam)
        inv = lam.inverse()
        return UVTensors(self.m, {k: a * lam for k, a in self.u.items()},
                         {k: b * inv for k, b in self.v.items()}, f"rescaled by {lam}")


@dataclass(frozen=True)
class PairOps:
    M: LinOp
    N: LinOp
    M_scalar: bool
    N_scalar: bool
    product_scalar: bool


@dataclass(eq=False)
class Symmetry:
    R: LinOp
    q: QRat
    kind: str  # "involutive" or "hecke"
    Psi: LinOp
    B: LinOp
    C: LinOp
    name: str = "custom"
    params: dict = field(default_factory=dict)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def N(self) -> int:
        return self.R.N

    @property
    def q_is_symbolic(self) -> bool:
        return not self.q.is_constant()

    def qn(self, k: int) -> QRat:
        """``k_q`` for this symmetry's ``q`` (the integer ``k`` when involutive)."""
        return qnum(k, None if self.q == Q else self.q)

    def qf(self, k: int) -> QRat:
        return qfact(k, None if self.q == Q else self.q)

    def Rinv(self) -> LinOp:
        if "Rinv" not in self._cache:
            # Hecke: R^-1 = R - (q - q^-1) I
            self._cache["Rinv"] = self.R - LinOp.identity(self.N, 2).scale(self.q - self.q.inverse())
        return self._cache["Rinv"]

    def R_at(self, k: int, legs: int) -> LinOp:
        key = ("R", k, legs)
        if key not in self._cache:
            self._cache[key] = place_on_legs(self.R, legs, k)
        return self._cache[key]

    def Rinv_at(self, k: int, legs: int) -> LinOp:
        key = ("Rinv", k, legs)
        if key not in self._cache:
            self._cache[key] = place_on_legs(self.Rinv(), legs, k)
        return self._cache[key]

    def C_string(self, legs: int) -> LinOp:
        key = ("Cs", legs)
        if key not in self._cache:
            out = self.C
            for _ in range(legs - 1):
                out = out.kron(self.C)
            self._cache[key] = out
        return self._cache[key]

    def r_trace_scalar(self, X: LinOp) -> QRat:
        return (X @ self.C).trace()

    # -- skew-symmetrizers ---------------------------------------------------
    def _check_q_generic(self, k: int) -> None:
        if self.q.is_constant():
            q0 = self.q.constant()
            if q0 == 0 or (q0 == -1):
                raise SymmetryError(f"q = {q0} is a root of unity of order <= {2 * k}")

    def skew_symmetrizer(self, k: int) -> LinOp:
        if k < 1:
            raise ValueError("k must be >= 1")
        key = ("P", k)
        if key in self._cache:
            return self._cache[key]
        self._check_q_generic(k)
        if k == 1:
            out = LinOp.identity(self.N, 1)
        else:
            j = k - 1
            prev = place_on_legs(self.skew_symmetrizer(j), k, 1)
            qj = self.qn(j)
            mid = LinOp.identity(self.N, k).scale((self.q ** j) / qj) - self.R_at(j, k)
            out = (prev @ mid @ prev).scale(qj / self.qn(k))
        self._cache[key] = out
        return out

    def skew_rank(self, k: int) -> int:
        key = ("rank", k)
        if key not in self._cache:
            self._cache[key] = self.skew_symmetrizer(k).rank()
        return self._cache[key]

    def birank(self, cutoff: int = 6):
        """``(m, 0)``, or None when no skew power vanishes up to ``cutoff``."""
        if cutoff < 2:
            raise ValueError("cutoff must be >= 2")
        for k in range(1, cutoff + 1):
            if self.skew_rank(k + 1) == 0:
                return (k, 0)
        return None

    @property
    def m(self) -> int:
        br = self.birank()
        if br is None:
            raise SymmetryError("bi-rank is indeterminate")
        return br[0]

    def uv_tensors(self) -> UVTensors:
        if "uv" in self._cache:
            return self._cache["uv"]
        m = self.m
        P = self.skew_symmetrizer(m)
        if self.skew_rank(m) != 1:
            raise SymmetryError(f"rank of the top skew-symmetrizer is {self.skew_rank(m)}, not 1")
        N = self.N
        row = next(i for i in range(P.dim) if any(P.data[i, j] for j in range(P.dim)))
        vrow = [P.data[row, j] for j in range(P.dim)]
        first = next(j for j, x in enumerate(vrow) if x)
        target = QRat(Fraction(-1, 2)) if (m, N) == (2, 2) else ONE
        s = target / vrow[first]
        v = {multi_index(j, N, m): x * s for j, x in enumerate(vrow) if x}
        # P[i, j] = u_i v^j, read u off the column of the chosen component
        inv = v[multi_index(first, N, m)].inverse()
        u = {multi_index(i, N, m): P.data[i, first] * inv for i in range(P.dim) if P.data[i, first]}
        uv = UVTensors(m, u, v, "first nonzero v component = -1/2 if m = N = 2 else 1")
        self._cache["uv"] = uv
        return uv

    def mn_ops(self, uv: UVTensors | None = None) -> PairOps:
        uv = uv or self.uv_tensors()
        m, N = uv.m, self.N
        pref = QRat((-1) ** (m - 1)) * self.q * self.qn(m)
        Mc: dict = {}
        Nc: dict = {}
        for ku, a in uv.u.items():
            for kv, b in uv.v.items():
                # M_i^j: u_{a.. i} v^{j a..}
                if ku[:-1] == kv[1:]:
                    key = ((ku[-1],), (kv[0],))
                    Mc[key] = Mc.get(key, ZERO) + a * b
                # N_i^j: u_{i a..} v^{a.. j}
                if ku[1:] == kv[:-1]:
                    key = ((ku[0],), (kv[-1],))
                    Nc[key] = Nc.get(key, ZERO) + a * b
        M = LinOp.from_components(N, 1, Mc).scale(pref)
        Nop = LinOp.from_components(N, 1, Nc).scale(pref)
        return PairOps(M, Nop, M.is_scalar(), Nop.is_scalar(), (M @ Nop).is_scalar())

    def prop24_check(self) -> dict:
        """Relations of C against u, v and P^(m), plus the partial-trace ladder."""
        m, N = self.m, self.N
        uv = self.uv_tensors()
        P = self.skew_symmetrizer(m)
        Cm = self.C_string(m)
        qm2 = self.q ** (-m * m)
        dim = N ** m
        uvec = [uv.u.get(multi_index(i, N, m), ZERO) for i in range(dim)]
        vvec = [uv.v.get(multi_index(i, N, m), ZERO) for i in range(dim)]
        Cu = [sum((Cm.data[i, j] * uvec[j] for j in range(dim)), ZERO) for i in range(dim)]
        vC = [sum((vvec[i] * Cm.data[i, j] for i in range(dim)), ZERO) for j in range(dim)]
        out = {
            "C_on_u": all(a == qm2 * b for a, b in zip(Cu, uvec)),
            "C_on_v": all(a == qm2 * b for a, b in zip(vC, vvec)),
            "C_string_P": (Cm @ P) == P.scale(qm2) and (P @ Cm) == P.scale(qm2),
        }
        ladder = {}
        for k in range(m):
            lhs = P.r_trace(range(k + 1, m + 1), self.C)
            coef = self.q ** (-m * (m - k)) * self.qf(k) * self.qf(m - k) / self.qf(m)
            if k == 0:
                ladder[k] = lhs == coef
            else:
                ladder[k] = lhs == self.skew_symmetrizer(k).scale(coef)
        out["ladder"] = all(ladder.values())
        out["ladder_by_k"] = ladder
        return out

    # -- serialisation ---------------------------------------------------------
    def to_json(self) -> dict:
        return {"N": self.N, "q": "sym" if self.q == Q else format_qrat(self.q), "R": self.R.to_json()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=1)


def validate(R: LinOp, q: QRat, name: str = "custom", params: dict | None = None) -> Symmetry:
    """Run every construction check and return the validated :class:`Symmetry`."""
    if R.legs != 2:
        raise SymmetryError("R must act on two legs")
    if R.N < 1:
        raise SymmetryError("dimension N must be positive")
    if not ybe_holds(R):
        raise SymmetryError("Yang-Baxter equation fails")
    if not hecke_holds(R, q):
        raise SymmetryError("Hecke condition fails")
    kind = "involutive" if q == ONE else "hecke"
    Psi = skew_inverse(R)
    if not skew_contraction_holds(R, Psi):
        raise SymmetryError("skew-inverse contraction fails")
    B, C = bc_ops(Psi)
    R1 = R
    BB, CC = B.kron(B), C.kron(C)
    if R1 @ BB != BB @ R1 or R1 @ CC != CC @ R1:
        raise SymmetryError("B or C does not commute with R")
    return Symmetry(R=R, q=q, kind=kind, Psi=Psi, B=B, C=C, name=name, params=dict(params or {}))


# -- built-ins ------------------------------------------------------------------

def flip_matrix(N: int) -> LinOp:
    return LinOp.flip(N)


def superflip_matrix(m: int, n: int) -> LinOp:
    N = m + n
    par = [0] * m + [1] * n
    return LinOp.from_components(
        N, 2, {((i, j), (j, i)): (-1) ** (par[i] * par[j]) for i in range(N) for j in range(N)})


def standard_matrix(N: int, q: QRat = Q) -> LinOp:
    comps = {}
    for i in range(N):
        comps[((i, i), (i, i))] = q
        for j in range(N):
            if i < j:
                comps[((i, j), (i, j))] = q - q.inverse()
            if i != j:
                comps[((i, j), (j, i))] = ONE
    return LinOp.from_components(N, 2, comps)


def jordan_matrix(a, b) -> LinOp:
    a, b = qrat(a), qrat(b)
    rows = [[ONE, a, -a, a * b],
            [ZERO, ZERO, ONE, -b],
            [ZERO, ONE, ZERO, b],
            [ZERO, ZERO, ZERO, ONE]]
    return LinOp(2, 2, rows)


def make_symmetry(kind: str, **params) -> Symmetry:
    """Build and validate a symmetry.

    ``kind`` is one of ``flip`` (``N``), ``superflip`` (``m``, ``n``),
    ``standard`` (``N``, optional rational ``q``), ``jordan`` (``a``, ``b``)
    or ``custom`` (``path`` to a symmetry file, or ``data`` already parsed).
    """
    if kind == "flip":
        N = int(params["N"])
        return validate(flip_matrix(N), ONE, f"flip({N})", {"N": N})
    if kind == "superflip":
        m, n = int(params["m"]), int(params["n"])
        return validate(superflip_matrix(m, n), ONE, f"superflip({m},{n})", {"m": m, "n": n})
    if kind == "standard":
        N = int(params["N"])
        q = params.get("q")
        qv = Q if q in (None, "sym") else qrat(q)
        if qv.is_constant() and qv.constant() in (0, 1, -1):
            raise SymmetryError(f"q = {qv} is not generic")
        label = f"standard({N})" if qv == Q else f"standard({N}, q={format_qrat(qv)})"
        return validate(standard_matrix(N, qv), qv, label, {"N": N, "q": format_qrat(qv) if qv != Q else "sym"})
    if kind == "jordan":
        a, b = Fraction(params["a"]), Fraction(params["b"])
        return validate(jordan_matrix(a, b), ONE, f"jordan({a},{b})", {"a": str(a), "b": str(b)})
    if kind == "custom":
        data = params.get("data")
        if data is None:
            data = json.loads(Path(params["path"]).read_text())
        return load_symmetry_json(data)
    raise SymmetryError(f"unknown symmetry kind {kind!r}")


def load_symmetry_json(data: dict[str, Any]) -> Symmetry:
    R = LinOp.from_json(data["R"])
    if int(data["N"]) != R.N:
        raise SymmetryError("N does not match the R matrix")
    qs = data.get("q", "sym")
    q = Q if qs == "sym" else parse(qs)
    return validate(R, q, data.get("name", "custom"))
