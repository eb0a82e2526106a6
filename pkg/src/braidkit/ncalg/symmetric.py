"""Quantum symmetric polynomials of a constant generating matrix.

``mode`` selects how the copies of the generating matrix are placed on the
legs: ``"re"`` uses the R-conjugated copies ``L_kbar``, ``"rtt"`` the plain
copies ``T_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from ..scalars import ONE, QRat
from ..symmetries import Symmetry
from ..tensors import LinOp, MatOverAlg, place_on_legs
from .oracle import IdealOracle
from .poly import NCPoly, ONE_POLY
from .presentation import barred, plain


def copies(sym: Symmetry, X: MatOverAlg, legs: int, mode: str) -> list[MatOverAlg]:
    if mode == "re":
        return barred(sym, X, legs)
    if mode == "rtt":
        return plain(X, legs)
    raise ValueError(f"unknown mode {mode!r}")


def _prod(ms):
    return reduce(lambda a, b: a @ b, ms)


def full_r_trace(sym: Symmetry, X) -> NCPoly:
    return X.r_trace(range(1, X.legs + 1), sym.C)


def elem_sym(sym: Symmetry, X: MatOverAlg, k: int, mode: str = "re") -> NCPoly:
    """``e_k = Tr_R(1..k)(P^(k) X_1 ... X_k)``; ``e_0 = 1``."""
    if k == 0:
        return ONE_POLY
    P = sym.skew_symmetrizer(k)
    return full_r_trace(sym, P @ _prod(copies(sym, X, k, mode)))


def det(sym: Symmetry, X: MatOverAlg, mode: str = "re") -> NCPoly:
    return elem_sym(sym, X, sym.m, mode)


def braid_string_down(sym: Symmetry, k: int) -> LinOp:
    """``R_{k-1} ... R_1`` on ``k`` legs (identity for ``k = 1``)."""
    out = LinOp.identity(sym.N, k)
    for j in range(k - 1, 0, -1):
        out = out @ sym.R_at(j, k)
    return out


def power_sum(sym: Symmetry, X: MatOverAlg, k: int, mode: str = "re", side: str = "left") -> NCPoly:
    """``p_k = Tr_R(1..k)(R_{k-1}...R_1 X_1...X_k)`` (or with the string on the right)."""
    S = braid_string_down(sym, k)
    prod = _prod(copies(sym, X, k, mode))
    return full_r_trace(sym, S @ prod if side == "left" else prod @ S)


def classical_power_trace(sym: Symmetry, X: MatOverAlg, k: int) -> NCPoly:
    """``Tr_R(X^k)`` with the ordinary matrix power."""
    Xk = _prod([X] * k)
    return full_r_trace(sym, Xk)


@dataclass(frozen=True)
class BraidWord:
    """Word in ``sigma_i^{+-1}``; ``letters`` holds signed 1-based indices."""

    legs: int
    letters: tuple = ()

    def realize(self, sym: Symmetry) -> LinOp:
        out = LinOp.identity(sym.N, self.legs)
        for a in self.letters:
            i = abs(a)
            if not 1 <= i < self.legs:
                raise ValueError(f"generator sigma_{i} does not act on {self.legs} legs")
            out = out @ (sym.R_at(i, self.legs) if a > 0 else sym.Rinv_at(i, self.legs))
        return out


def ch(sym: Symmetry, L: MatOverAlg, z: BraidWord, side: str = "left", mode: str = "re") -> NCPoly:
    Z = z.realize(sym)
    prod = _prod(copies(sym, L, z.legs, mode))
    return full_r_trace(sym, Z @ prod if side == "left" else prod @ Z)


def commutator_entries(x: NCPoly, X: MatOverAlg) -> list[NCPoly]:
    return [x * v - v * x for _, _, v in X.nonzero()]


def is_central(oracle: IdealOracle, x: NCPoly, gens: list[NCPoly]) -> bool:
    return all(oracle.contains(x * g - g * x) for g in gens)


def prop33_entries(sym: Symmetry, L: MatOverAlg) -> list[NCPoly]:
    """Entries of ``P L1..Lm - q^(m^2) det P`` and ``L1..Lm P - q^(m^2) det P``."""
    m = sym.m
    P = sym.skew_symmetrizer(m)
    prod = _prod(barred(sym, L, m))
    d = det(sym, L)
    rhs = MatOverAlg.from_linop(P.scale(sym.q ** (m * m))).times_element(d)
    out = []
    for X in (P @ prod - rhs, prod @ P - rhs):
        out.extend(v for _, _, v in X.nonzero())
    return out


def characteristic_check(sym: Symmetry, oracle: IdealOracle, L: MatOverAlg, z: BraidWord,
                         side: str = "left") -> dict:
    """``[ch(z), l_i^j]`` in the re ideal for every generator."""
    if oracle.cap < 3:
        raise ValueError("cap must be at least 3")
    c = ch(sym, L, z, side)
    bad = [i for i, x in enumerate(commutator_entries(c, L)) if not oracle.contains(x)]
    return {"passed": not bad, "word": list(z.letters), "legs": z.legs, "failing_generators": bad}


def bethe_check(sym: Symmetry, oracle: IdealOracle, T: MatOverAlg) -> dict:
    """Commuting but non-central power sums of the RTT algebra."""
    p1 = power_sum(sym, T, 1, "rtt")
    p2 = power_sum(sym, T, 2, "rtt")
    gens = [v for _, _, v in T.nonzero()]
    commute = oracle.contains(p1 * p2 - p2 * p1)
    noncentral = [i for i, g in enumerate(gens) if not oracle.contains(p1 * g - g * p1)]
    return {"p1_p2_commute": commute, "p1_noncentral_generators": noncentral}


def rtt_det_centrality(sym: Symmetry, oracle: IdealOracle, T: MatOverAlg) -> dict:
    """Whether ``det_RTT`` commutes with every ``t_i^j``, next to the scalarity of ``N``."""
    if oracle.cap < sym.m + 1:
        raise ValueError("cap must be at least m + 1")
    d = det(sym, T, "rtt")
    gens = [T.data[i, j] for i in range(sym.N) for j in range(sym.N)]
    central = all(oracle.contains(d * g - g * d) for g in gens)
    n_scalar = sym.mn_ops().N_scalar
    return {"central": central, "N_scalar": n_scalar, "consistent": central == n_scalar}


# names used in the operation list
elem_sym_const = elem_sym
det_const = det
power_sum_const = power_sum
