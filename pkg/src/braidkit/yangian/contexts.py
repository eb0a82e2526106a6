"""Where a generating matrix ``L(u)`` lives while identities are checked.

Every context exposes ``L(j)``: the generating matrix at the ``j``-th shifted
spectral point (``q^(-2j) u`` for a Hecke symmetry, ``u - j`` for an
involutive one) as a :class:`MatSeries`, together with its barred or plain
copies on several legs.

* :class:`EvalContext` substitutes ``L(u) = A + B/u`` at a numeric point
  ``u0`` (``A = I`` for the braided Yangian, ``A = T`` for the RTT-type
  evaluation target); series have order 0.
* :class:`AbstractContext` keeps ``u`` formal: ``L(u) = I + sum_k L[k] z^k``
  truncated at weight ``W`` in ``z = 1/u``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..ncalg.oracle import IdealOracle
from ..ncalg.poly import NCPoly
from ..ncalg.presentation import barred, plain
from ..scalars import ONE, Q, QRat, qrat
from ..symmetries import Symmetry
from ..tensors import LinOp, MatOverAlg, place_on_legs
from .series import MatSeries


class ShiftPole(ArithmeticError):
    """A shifted spectral point hits a pole."""


class Context:
    sym: Symmetry
    order: int
    copy_mode: str  # "re" (barred) or "rtt" (plain)

    @property
    def hecke(self) -> bool:
        return self.sym.kind == "hecke"

    def copies_of(self, X: MatOverAlg, legs: int) -> list:
        key = (id(X), legs)
        cache = self.__dict__.setdefault("_copies", {})
        if key not in cache:
            cache[key] = (barred(self.sym, X, legs) if self.copy_mode == "re" else plain(X, legs), X)
        return cache[key][0]

    def identity(self, legs: int) -> MatSeries:
        return MatSeries.const(LinOp.identity(self.sym.N, legs), self.order)


class EvalContext(Context):
    """``L(x) = A + B/x`` evaluated at ``x = x_j`` for a numeric base point ``u0``."""

    def __init__(self, sym: Symmetry, u0, A: MatOverAlg | None, B: MatOverAlg, copy_mode: str = "re"):
        self.sym = sym
        self.u0 = qrat(u0)
        self.A = A
        self.B = B
        self.copy_mode = copy_mode
        self.order = 0

    def point(self, j: int) -> QRat:
        if self.hecke:
            x = self.u0 * (self.sym.q ** (-2 * j))
        else:
            x = self.u0 - j
        if x.is_zero():
            raise ShiftPole(f"shifted point {j} of {self.u0} is zero")
        return x

    def Lbar(self, j: int, k: int, legs: int) -> MatSeries:
        inv = self.point(j).inverse()
        Bk = self.copies_of(self.B, legs)[k - 1].scale(inv)
        if self.A is None:
            Ak = LinOp.identity(self.sym.N, legs)
        else:
            Ak = self.copies_of(self.A, legs)[k - 1]
        return MatSeries.const(Ak + Bk, 0)

    def L(self, j: int) -> MatSeries:
        return self.Lbar(j, 1, 1)


class AbstractContext(Context):
    """Formal ``L(x_j)`` truncated at weight ``order`` in ``z = 1/u``."""

    def __init__(self, sym: Symmetry, coeffs: list[MatOverAlg], order: int, copy_mode: str = "re"):
        # coeffs[k-1] is L[k] for k = 1..K; L[0] = I
        self.sym = sym
        self.coeffs = coeffs
        self.order = order
        self.copy_mode = copy_mode
        if order > len(coeffs):
            raise ValueError("truncation order exceeds the number of Laurent coefficients")

    def _factor(self, j: int, w: int, k: int) -> QRat:
        """Coefficient of ``L[k] z^w`` in ``L(x_j)``."""
        if self.hecke:
            return self.sym.q ** (2 * j * k) if w == k else QRat(0)
        if w < k:
            return QRat(0)
        # (u - j)^-k = z^k (1 - j z)^-k
        return QRat(comb(w - 1, w - k) * Fraction(j) ** (w - k))

    def Lbar(self, j: int, k: int, legs: int) -> MatSeries:
        out = {0: LinOp.identity(self.sym.N, legs)}
        for w in range(1, self.order + 1):
            acc = None
            for kk in range(1, w + 1):
                f = self._factor(j, w, kk)
                if f.is_zero():
                    continue
                X = self.copies_of(self.coeffs[kk - 1], legs)[k - 1].scale(f)
                acc = X if acc is None else acc + X
            if acc is not None:
                out[w] = acc
        return MatSeries(self.sym.N, legs, out, self.order)

    def L(self, j: int) -> MatSeries:
        return self.Lbar(j, 1, 1)
