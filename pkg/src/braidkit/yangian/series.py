"""Truncated power series in ``z = 1/u`` with matrix or scalar coefficients.

A constant (order 0) series is just a wrapped value, which lets the same
identity code run on evaluation images at a point (order 0) and on the
abstract truncated Yangian (order ``W``).
"""

from __future__ import annotations

from ..ncalg.poly import NCPoly, ONE_POLY, ZERO_POLY
from ..scalars import QRat, qrat
from ..tensors import LinOp, MatOverAlg, TensorOp


class PolySeries:
    """``sum_w c[w] z^w`` with :class:`NCPoly` coefficients, ``w <= order``."""

    def __init__(self, coeffs: dict, order: int):
        self.order = order
        self.c = {w: p for w, p in coeffs.items() if w <= order and p}

    @classmethod
    def one(cls, order: int) -> "PolySeries":
        return cls({0: ONE_POLY}, order)

    def __add__(self, other: "PolySeries") -> "PolySeries":
        out = dict(self.c)
        for w, p in other.c.items():
            out[w] = out.get(w, ZERO_POLY) + p
        return PolySeries(out, min(self.order, other.order))

    def __neg__(self):
        return PolySeries({w: -p for w, p in self.c.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "PolySeries":
        s = qrat(s)
        return PolySeries({w: p.scale(s) for w, p in self.c.items()}, self.order)

    def __mul__(self, other: "PolySeries") -> "PolySeries":
        order = min(self.order, other.order)
        out: dict = {}
        for a, p in self.c.items():
            for b, r in other.c.items():
                if a + b <= order:
                    out[a + b] = out.get(a + b, ZERO_POLY) + p * r
        return PolySeries(out, order)

    def at(self, w: int) -> NCPoly:
        return self.c.get(w, ZERO_POLY)

    def coefficients(self):
        return [self.at(w) for w in range(self.order + 1)]

    def entries(self) -> list[NCPoly]:
        return [p for p in self.c.values() if p]


class MatSeries:
    """``sum_w X[w] z^w`` with operator-shaped coefficients on ``legs`` legs."""

    def __init__(self, N: int, legs: int, coeffs: dict, order: int):
        self.N = N
        self.legs = legs
        self.order = order
        self.c = {w: X for w, X in coeffs.items() if w <= order}

    @classmethod
    def const(cls, X: TensorOp, order: int) -> "MatSeries":
        return cls(X.N, X.legs, {0: X}, order)

    def _zero(self):
        return MatOverAlg.zeros(self.N, self.legs)

    def at(self, w: int) -> TensorOp:
        return self.c[w] if w in self.c else self._zero()

    def __add__(self, other: "MatSeries") -> "MatSeries":
        out = dict(self.c)
        for w, X in other.c.items():
            out[w] = out[w] + X if w in out else X
        return MatSeries(self.N, self.legs, out, min(self.order, other.order))

    def __neg__(self):
        return MatSeries(self.N, self.legs, {w: -X for w, X in self.c.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s) -> "MatSeries":
        s = qrat(s)
        return MatSeries(self.N, self.legs, {w: X.scale(s) for w, X in self.c.items()}, self.order)

    def __matmul__(self, other) -> "MatSeries":
        if isinstance(other, TensorOp):
            return MatSeries(self.N, self.legs, {w: X @ other for w, X in self.c.items()}, self.order)
        order = min(self.order, other.order)
        out: dict = {}
        for a, X in self.c.items():
            for b, Y in other.c.items():
                if a + b <= order:
                    t = X @ Y
                    out[a + b] = out[a + b] + t if a + b in out else t
        return MatSeries(self.N, self.legs, out, order)

    def __rmatmul__(self, other: TensorOp) -> "MatSeries":
        return MatSeries(self.N, self.legs, {w: other @ X for w, X in self.c.items()}, self.order)

    def times(self, s: PolySeries) -> "MatSeries":
        """Multiply every entry on the right by the scalar series ``s``."""
        order = min(self.order, s.order)
        out: dict = {}
        for a, X in self.c.items():
            Xa = X if isinstance(X, MatOverAlg) else MatOverAlg.from_linop(X)
            for b, p in s.c.items():
                if a + b <= order:
                    t = Xa.times_element(p)
                    out[a + b] = out[a + b] + t if a + b in out else t
        return MatSeries(self.N, self.legs, out, order)

    def r_trace(self, legs, C: LinOp):
        legs = list(legs)
        if len(legs) == self.legs:
            out = {}
            for w, X in self.c.items():
                v = X.r_trace(legs, C)
                out[w] = v if isinstance(v, NCPoly) else NCPoly.const(v)
            return PolySeries(out, self.order)
        return MatSeries(self.N, self.legs - len(legs),
                         {w: X.r_trace(legs, C) for w, X in self.c.items()}, self.order)

    def entries(self) -> list[NCPoly]:
        out = []
        for X in self.c.values():
            for _, _, v in X.nonzero():
                out.append(v if isinstance(v, NCPoly) else NCPoly.const(v))
        return out
