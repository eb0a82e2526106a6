"""Spectral-parameter R-matrices ``R(u, v) = R + g(u, v) I`` built from a symmetry.

Two flavors are provided:

* rational (involutive ``R``): ``g(u, v) = -1/(u - v)``; for ``R = P`` this is
  Yang's matrix ``P - I/(u - v)``;
* trigonometric (Hecke ``R``): ``g(u, v) = -u (q - q^-1)/(u - v)``, which only
  depends on ``u/v``.

Spectral values are exact rationals or elements of Q(q) (so that points such
as ``q^-2 u`` can be used); they are never symbolic variables.  The
parameterized braid relation is certified on a grid: after clearing the
denominators ``(u-v)(u-w)(v-w)`` both sides are polynomials of degree at most
three in each variable, so agreement on a grid with more than six values per
variable is a proof.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import linalg
from .scalars import ONE, ZERO, QRat, format_qrat, qrat
from .symmetries import Symmetry
from .tensors import LinOp, place_on_legs

RATIONAL = "rational-additive"
TRIG = "trig-multiplicative"

#: minimal number of distinct values per spectral variable for a YBE certificate
YBE_MIN_POINTS = 7


class PoleError(ArithmeticError):
    """A spectral point hits a pole of ``g``."""


class InsufficientSample(ValueError):
    """The sample is too small to certify the identity."""


def _s(x) -> QRat:
    return qrat(x)


def g_rational(u, v) -> QRat:
    d = _s(u) - _s(v)
    if d.is_zero():
        raise PoleError("pole at u = v")
    return -d.inverse()


def make_g_trig(q: QRat) -> Callable:
    h = q - q.inverse()

    def g_trig(u, v) -> QRat:
        u, v = _s(u), _s(v)
        d = u - v
        if d.is_zero():
            raise PoleError("pole at u = v")
        return -(u * h) / d

    return g_trig


@dataclass
class CurrentR:
    base: Symmetry
    flavor: str
    g: Callable
    description: str

    def __call__(self, u, v) -> LinOp:
        return eval_current(self, u, v)

    def phi(self, u, v) -> QRat:
        """Scalar with ``R(u, v) R(v, u) = phi(u, v) I``."""
        u, v = _s(u), _s(v)
        d = u - v
        if d.is_zero():
            raise PoleError("pole at u = v")
        if self.flavor == TRIG:
            h = self.base.q - self.base.q.inverse()
            return ONE - u * v * h * h / (d * d)
        return ONE - (d * d).inverse()

    def d(self, u, v) -> QRat:
        """Normalizing factor making ``R(u, v)/d(u, v)`` unitary."""
        u, v = _s(u), _s(v)
        diff = u - v
        if diff.is_zero():
            raise PoleError("pole at u = v")
        if self.flavor == TRIG:
            h = self.base.q - self.base.q.inverse()
            return self.base.q - u * h / diff
        return ONE - diff.inverse()


def baxterize(sym: Symmetry, g: Callable | None = None, description: str | None = None) -> CurrentR:
    """Current R-matrix of ``sym``; the flavor is forced by ``sym.kind``.

    ``g`` overrides the scalar function (used to demonstrate that other
    choices break the braid relation).
    """
    if sym.kind == "involutive":
        flavor, default, desc = RATIONAL, g_rational, "g(u,v) = -1/(u-v)"
    else:
        flavor, default, desc = TRIG, make_g_trig(sym.q), "g(u,v) = -u(q-q^-1)/(u-v)"
    if g is not None:
        return CurrentR(sym, flavor, g, description or "custom g")
    return CurrentR(sym, flavor, default, desc)


def eval_current(cr: CurrentR, u0, v0) -> LinOp:
    g = cr.g(u0, v0)
    return cr.base.R + LinOp.identity(cr.base.N, 2).scale(g)


# -- samples ----------------------------------------------------------------

@dataclass(frozen=True)
class SpectralSample:
    points: tuple
    seed: int

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("sample points must be distinct")


def sample_points(n: int, seed: int, avoid: Sequence = (), lo: int = -40, hi: int = 40) -> list[Fraction]:
    """``n`` distinct nonzero rationals drawn deterministically from ``seed``."""
    rng = random.Random(seed)
    out: list[Fraction] = []
    seen = set(Fraction(a) for a in avoid)
    while len(out) < n:
        num = rng.randint(lo, hi)
        den = rng.randint(1, 7)
        x = Fraction(num, den)
        if x == 0 or x in seen:
            continue
        seen.add(x)
        out.append(x)
    return out


def ybe_grid(n: int, seed: int) -> tuple[SpectralSample, SpectralSample, SpectralSample]:
    """Three pairwise disjoint point sets (one per spectral variable)."""
    pts = sample_points(3 * n, seed)
    return (SpectralSample(tuple(pts[:n]), seed), SpectralSample(tuple(pts[n:2 * n]), seed),
            SpectralSample(tuple(pts[2 * n:]), seed))


def sample_pairs(n: int, seed: int, forbid: Callable | None = None) -> list[tuple[Fraction, Fraction]]:
    """``n`` distinct pairs ``(u, v)`` with ``u != v``; ``forbid(u, v)`` rejects extra poles."""
    rng = random.Random(seed)
    out = []
    seen = set()
    while len(out) < n:
        u = Fraction(rng.randint(-30, 30), rng.randint(1, 5))
        v = Fraction(rng.randint(-30, 30), rng.randint(1, 5))
        if u == v or u == 0 or v == 0 or (u, v) in seen:
            continue
        if forbid is not None and forbid(u, v):
            continue
        seen.add((u, v))
        out.append((u, v))
    return out


# -- certification ------------------------------------------------------------

@dataclass
class Certificate:
    passed: bool
    points_checked: int
    grid_sizes: tuple
    seed: int | None
    method: str
    first_failure: tuple | None = None
    details: dict = field(default_factory=dict)


class _YBEKernel:
    """Linear relations among the nine operator words that appear in the expansion.

    ``(R12 + a1)(R23 + a2)(R12 + a3) - (R23 + b1)(R12 + b2)(R23 + b3)`` is a
    combination of the words below with coefficients polynomial in the
    ``a``'s and ``b``'s; it vanishes iff that coefficient vector lies in the
    kernel computed here once per symmetry.
    """

    def __init__(self, R: LinOp):
        R1 = place_on_legs(R, 3, 1)
        R2 = place_on_legs(R, 3, 2)
        I = LinOp.identity(R.N, 3)
        words = [R1 @ R2 @ R1, R2 @ R1 @ R2, R1 @ R1, R2 @ R2, R1 @ R2, R2 @ R1, R1, R2, I]
        cols = []
        for W in words:
            cols.append({i * W.dim + j: v for i, j, v in W.nonzero()})
        self.kernel = linalg.nullspace(cols, len(words))
        self.ech = linalg.Echelon()
        for k in self.kernel:
            self.ech.add({i: x for i, x in enumerate(k) if x})

    @staticmethod
    def coefficients(a1, a2, a3, b1, b2, b3) -> list[QRat]:
        return [ONE, -ONE, a2, -b2, a3 - b1, a1 - b3,
                a2 * a3 + a1 * a2 - b1 * b3,
                a1 * a3 - b2 * b3 - b1 * b2,
                a1 * a2 * a3 - b1 * b2 * b3]

    def holds(self, a1, a2, a3, b1, b2, b3) -> bool:
        c = self.coefficients(a1, a2, a3, b1, b2, b3)
        return self.ech.contains({i: x for i, x in enumerate(c) if x})


def ybe_at(cr: CurrentR, u, v, w) -> bool:
    """Dense check of ``R12(u,v) R23(u,w) R12(v,w) = R23(v,w) R12(u,w) R23(u,v)``."""
    def on(k, x, y):
        return place_on_legs(eval_current(cr, x, y), 3, k)

    return on(1, u, v) @ on(2, u, w) @ on(1, v, w) == on(2, v, w) @ on(1, u, w) @ on(2, u, v)


def certify_param_ybe(cr: CurrentR, n: int = YBE_MIN_POINTS, seed: int = 0, method: str = "kernel",
                      grid=None) -> Certificate:
    """Check the spectral braid relation on an ``n^3`` grid of exact rationals."""
    U, V, W = grid if grid is not None else ybe_grid(n, seed)
    sizes = (len(U.points), len(V.points), len(W.points))
    if min(sizes) < YBE_MIN_POINTS:
        raise InsufficientSample(f"need at least {YBE_MIN_POINTS} values per variable, got {sizes}")
    ker = _YBEKernel(cr.base.R) if method == "kernel" else None
    count = 0
    for u in U.points:
        for v in V.points:
            guv = cr.g(u, v)
            for w in W.points:
                count += 1
                if ker is not None:
                    ok = ker.holds(guv, cr.g(u, w), cr.g(v, w), cr.g(v, w), cr.g(u, w), guv)
                else:
                    ok = ybe_at(cr, u, v, w)
                if not ok:
                    return Certificate(False, count, sizes, seed, method, (u, v, w))
    return Certificate(True, count, sizes, seed, method)


def hecke_shift_holds(cr: CurrentR, u, v) -> bool:
    """``(R(u,v) - (q+g))(R(u,v) + (q^-1 - g)) = 0`` at one point."""
    q = cr.base.q
    g = cr.g(u, v)
    Ruv = eval_current(cr, u, v)
    I = LinOp.identity(cr.base.N, 2)
    return ((Ruv - I.scale(q + g)) @ (Ruv + I.scale(q.inverse() - g))).is_zero()


@dataclass
class UnitarityReport:
    passed: bool
    phi_ok: bool
    normalized_ok: bool
    pairs: list
    failures: list

    def as_dict(self) -> dict:
        return {"passed": self.passed, "phi_ok": self.phi_ok, "normalized_ok": self.normalized_ok,
                "pairs": [[str(u), str(v)] for u, v in self.pairs],
                "failures": [[str(u), str(v), why] for u, v, why in self.failures]}


def normalized(cr: CurrentR) -> Callable:
    """Evaluator for ``R(u, v)/d(u, v)``."""
    def ev(u, v) -> LinOp:
        d = cr.d(u, v)
        if d.is_zero():
            raise PoleError(f"normalizing factor vanishes at ({u}, {v})")
        return eval_current(cr, u, v).scale(d.inverse())
    return ev


def unitarity_and_normalize(cr: CurrentR, n: int = 10, seed: int = 0):
    """Check ``R(u,v)R(v,u) = phi I`` and ``Rn(u,v)Rn(v,u) = I`` at sampled pairs.

    Returns ``(report, normalized evaluator)``.  Pairs where ``d`` vanishes
    are skipped by resampling.
    """
    def bad(u, v):
        return cr.d(u, v).is_zero() or cr.d(v, u).is_zero()

    pairs = sample_pairs(n, seed, forbid=bad)
    ev = normalized(cr)
    I = LinOp.identity(cr.base.N, 2)
    failures = []
    phi_ok = norm_ok = True
    for u, v in pairs:
        if eval_current(cr, u, v) @ eval_current(cr, v, u) != I.scale(cr.phi(u, v)):
            phi_ok = False
            failures.append((u, v, "phi"))
        if ev(u, v) @ ev(v, u) != I:
            norm_ok = False
            failures.append((u, v, "normalized"))
    return UnitarityReport(phi_ok and norm_ok, phi_ok, norm_ok, pairs, failures), ev
