"""Quadratic presentations of the RTT, RE and modified RE algebras.

Generator ``l_i^j`` (lower index ``i``, upper ``j``, both 1-based in labels)
is printed ``l[i,j]`` and sits at entry ``[i-1, j-1]`` of the generating
:class:`~braidkit.tensors.MatOverAlg`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..scalars import QRat, qrat
from ..symmetries import Symmetry
from ..tensors import LinOp, MatOverAlg, place_on_legs
from .poly import Alphabet, NCPoly


def matrix_labels(name: str, N: int, suffix: str = "") -> list[str]:
    return [f"{name}[{i + 1},{j + 1}{suffix}]" for i in range(N) for j in range(N)]


def gen_matrix(alphabet: Alphabet, name: str, N: int, suffix: str = "") -> MatOverAlg:
    """Generating matrix whose ``[i, j]`` entry is the generator ``name[i+1,j+1]``."""
    L = MatOverAlg.zeros(N, 1)
    for i in range(N):
        for j in range(N):
            L.data[i, j] = alphabet.gen(f"{name}[{i + 1},{j + 1}{suffix}]")
    return L


def barred(sym: Symmetry, L: MatOverAlg, legs: int) -> list[MatOverAlg]:
    """``[L_1bar, ..., L_legs bar]`` with ``L_{k+1}bar = R_k L_kbar R_k^-1``."""
    out = [place_on_legs(L, legs, 1)]
    for k in range(1, legs):
        out.append(sym.R_at(k, legs) @ out[-1] @ sym.Rinv_at(k, legs))
    return out


def plain(L: MatOverAlg, legs: int) -> list[MatOverAlg]:
    """``[L_1, ..., L_legs]``: ``L`` placed on each leg."""
    return [place_on_legs(L, legs, k) for k in range(1, legs + 1)]


def entries(X: MatOverAlg) -> list[NCPoly]:
    return [v for _, _, v in X.nonzero()]


@dataclass
class Presentation:
    alphabet: Alphabet
    relations: list
    kind: str
    N: int
    meta: dict = field(default_factory=dict)

    def weights(self):
        return self.alphabet.weight_map()

    def is_homogeneous(self) -> bool:
        w = self.weights()
        for r in self.relations:
            top = r.weight(w)
            if any(self.alphabet.word_weight(word) != top for word in r.terms):
                return False
        return True

    def max_relation_degree(self) -> int:
        return max((r.degree() for r in self.relations), default=0)


def rtt_relation_matrix(sym: Symmetry, T: MatOverAlg) -> MatOverAlg:
    T1, T2 = plain(T, 2)
    return sym.R @ T1 @ T2 - T1 @ T2 @ sym.R


def re_relation_matrix(sym: Symmetry, L: MatOverAlg, h=0) -> MatOverAlg:
    R = sym.R
    L1 = place_on_legs(L, 2, 1)
    out = R @ L1 @ R @ L1 - L1 @ R @ L1 @ R
    h = qrat(h)
    if h:
        out = out - (R @ L1 - L1 @ R).scale(h)
    return out


def build_presentation(sym: Symmetry, kind: str, h=1) -> Presentation:
    """Entry-wise relations of the matrix equation.

    ``kind`` is ``"rtt"`` (generators ``t[i,j]``), ``"re"`` or ``"mre"``
    (generators ``l[i,j]``; ``mre`` uses the parameter ``h``).
    """
    N = sym.N
    if kind == "rtt":
        A = Alphabet(matrix_labels("t", N))
        rel = rtt_relation_matrix(sym, gen_matrix(A, "t", N))
        meta = {}
    elif kind in ("re", "mre"):
        A = Alphabet(matrix_labels("l", N))
        hh = qrat(h) if kind == "mre" else QRat(0)
        rel = re_relation_matrix(sym, gen_matrix(A, "l", N), hh)
        meta = {"h": str(hh)}
    else:
        raise ValueError(f"unknown presentation kind {kind!r}")
    return Presentation(A, entries(rel), kind, N, meta)


def rtt_eval_target(sym: Symmetry) -> Presentation:
    """Target algebra of ``T(u) -> T + Tbar/u`` for the RTT-type Yangian.

    Generators ``t[i,j]`` (for ``T``) and ``s[i,j]`` (for ``Tbar``).  The
    relations are read off from the requirement that the substitution
    satisfies the RTT-type Yangian relation for all ``u, v``.
    """
    N = sym.N
    A = Alphabet(matrix_labels("t", N) + matrix_labels("s", N))
    T = gen_matrix(A, "t", N)
    S = gen_matrix(A, "s", N)
    R = sym.R
    T1, T2 = plain(T, 2)
    S1, S2 = plain(S, 2)
    rels = [R @ T1 @ T2 - T1 @ T2 @ R, R @ S1 @ T2 - T1 @ S2 @ R]
    if sym.kind == "hecke":
        rels.append(R @ S1 @ S2 - S1 @ S2 @ R)
    else:
        rels.append(R @ S1 @ S2 - S1 @ S2 @ R - (T1 @ S2 - S1 @ T2))
    out = []
    for X in rels:
        out.extend(entries(X))
    return Presentation(A, out, "rtt-eval", N)
