"""Operators on tensor powers of an N-dimensional space.

Index convention (fixed everywhere in the package): a basis vector of
``V^{(x)k}`` is a multi-index ``(i_1, ..., i_k)`` with ``0 <= i_j < N``; it is
flattened lexicographically with leg 1 outermost,
``flat = sum_j i_j * N**(k - j)``.  A two-leg operator with components
``R[(i, j), (k, l)]`` has the lower (input) pair as row and the upper
(output) pair as column, so matrix products compose operators in the order
they are written and the flip satisfies ``P[(i, j), (j, i)] = 1``.

Storage is dense (a numpy object array); products skip zero entries.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .ncalg.poly import ZERO_POLY, NCPoly
from .scalars import ONE, ZERO, QRat, format_qrat, parse, qrat


def flat_index(multi: Sequence[int], N: int) -> int:
    out = 0
    for i in multi:
        out = out * N + i
    return out


def multi_index(flat: int, N: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        flat, r = divmod(flat, N)
        out.append(r)
    return tuple(reversed(out))


def _nonzero_rows(data):
    n, m = data.shape
    rows = []
    for i in range(n):
        r = data[i]
        rows.append([(j, r[j]) for j in range(m) if r[j]])
    return rows


class TensorOp:
    """Common machinery for :class:`LinOp` and :class:`MatOverAlg`."""

    zero = ZERO

    def __init__(self, N: int, legs: int, data):
        data = np.asarray(data, dtype=object)
        dim = N ** legs
        if data.shape != (dim, dim):
            raise ValueError(f"entries must have shape {(dim, dim)}, got {data.shape}")
        self.N = N
        self.legs = legs
        self.data = data

    @property
    def dim(self) -> int:
        return self.N ** self.legs

    def _new(self, legs, data):
        return type(self)(self.N, legs, data)

    def __getitem__(self, idx):
        r, c = idx
        if isinstance(r, tuple):
            r = flat_index(r, self.N)
        if isinstance(c, tuple):
            c = flat_index(c, self.N)
        return self.data[r, c]

    def nonzero(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                v = self.data[i, j]
                if v:
                    yield i, j, v

    def is_zero(self) -> bool:
        return not any(True for _ in self.nonzero())

    def __eq__(self, other):
        if not isinstance(other, TensorOp):
            return NotImplemented
        if (self.N, self.legs) != (other.N, other.legs):
            return False
        return (self - other).is_zero()

    __hash__ = None

    def _check(self, other):
        if (self.N, self.legs) != (other.N, other.legs):
            raise ValueError("shape mismatch between tensor operators")

    def __add__(self, other):
        if not isinstance(other, TensorOp):
            return NotImplemented
        self._check(other)
        cls = MatOverAlg if MatOverAlg in (type(self), type(other)) else type(self)
        return cls(self.N, self.legs, self.data + other.data)

    def __sub__(self, other):
        if not isinstance(other, TensorOp):
            return NotImplemented
        self._check(other)
        cls = MatOverAlg if MatOverAlg in (type(self), type(other)) else type(self)
        return cls(self.N, self.legs, self.data - other.data)

    def __neg__(self):
        return self._new(self.legs, -self.data)

    def scale(self, c) -> "TensorOp":
        c = qrat(c)
        out = np.empty(self.data.shape, dtype=object)
        flat_in = self.data.ravel()
        flat_out = out.ravel()
        for i, v in enumerate(flat_in):
            flat_out[i] = v * c if v else v
        return self._new(self.legs, out)

    def __mul__(self, c):
        if isinstance(c, TensorOp):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, TensorOp):
            return NotImplemented
        self._check(other)
        cls = MatOverAlg if MatOverAlg in (type(self), type(other)) else LinOp
        zero = cls.zero
        n = self.dim
        out = np.empty((n, n), dtype=object)
        out.fill(zero)
        brows = _nonzero_rows(other.data)
        arows = _nonzero_rows(self.data)
        for i in range(n):
            acc: dict = {}
            for k, a in arows[i]:
                for j, b in brows[k]:
                    t = a * b
                    v = acc.get(j)
                    acc[j] = t if v is None else v + t
            for j, v in acc.items():
                out[i, j] = v
        return cls(self.N, self.legs, out)

    # -- leg operations -------------------------------------------------
    def partial_trace(self, leg: int) -> "TensorOp":
        """Trace over one leg (1-based); the result has one leg fewer."""
        k = self.legs
        if not 1 <= leg <= k:
            raise ValueError(f"leg {leg} out of range 1..{k}")
        N = self.N
        if k == 1:
            tot = self.zero
            for i in range(N):
                v = self.data[i, i]
                if v:
                    tot = tot + v
            return tot
        dim_out = N ** (k - 1)
        out = np.empty((dim_out, dim_out), dtype=object)
        out.fill(self.zero)
        for i, j, v in self.nonzero():
            ri = multi_index(i, N, k)
            cj = multi_index(j, N, k)
            if ri[leg - 1] != cj[leg - 1]:
                continue
            r = flat_index(ri[: leg - 1] + ri[leg:], N)
            c = flat_index(cj[: leg - 1] + cj[leg:], N)
            out[r, c] = out[r, c] + v
        return self._new(k - 1, out)

    def insert_on_leg(self, op: "LinOp", leg: int, side: str = "right") -> "TensorOp":
        """Multiply by a single-leg operator placed on ``leg``."""
        placed = place_on_legs(op, self.legs, leg)
        return self @ placed if side == "right" else placed @ self

    def r_trace(self, legs: Iterable[int], C: "LinOp"):
        """R-trace over the given legs: insert ``C`` on each, then trace it out."""
        if C.legs != 1 or C.N != self.N:
            raise ValueError("C must be a single-leg operator on the same space")
        legs = sorted(set(legs), reverse=True)
        cur = self
        for leg in legs:
            cur = cur.insert_on_leg(C, leg).partial_trace(leg)
        return cur

    def permute_legs(self, perm: Sequence[int]) -> "TensorOp":
        """Relabel legs: leg ``perm[j]`` of the input becomes leg ``j+1`` (1-based)."""
        k, N = self.legs, self.N
        t = self.data.reshape([N] * (2 * k))
        axes = [p - 1 for p in perm] + [k + p - 1 for p in perm]
        return self._new(k, np.ascontiguousarray(t.transpose(axes)).reshape(self.dim, self.dim))

    def map_entries(self, f) -> "TensorOp":
        out = np.empty(self.data.shape, dtype=object)
        for idx, v in np.ndenumerate(self.data):
            out[idx] = f(v)
        return self._new(self.legs, out)


class LinOp(TensorOp):
    """Dense numeric operator on ``V^{(x)legs}`` with :class:`QRat` entries."""

    zero = ZERO

    def __init__(self, N: int, legs: int, data):
        super().__init__(N, legs, data)
        flat = self.data.ravel()
        for i, v in enumerate(flat):
            if not isinstance(v, QRat):
                flat[i] = qrat(v)

    @classmethod
    def identity(cls, N: int, legs: int = 1) -> "LinOp":
        dim = N ** legs
        data = np.empty((dim, dim), dtype=object)
        data.fill(ZERO)
        for i in range(dim):
            data[i, i] = ONE
        return cls(N, legs, data)

    @classmethod
    def zeros(cls, N: int, legs: int = 1) -> "LinOp":
        dim = N ** legs
        data = np.empty((dim, dim), dtype=object)
        data.fill(ZERO)
        return cls(N, legs, data)

    @classmethod
    def from_components(cls, N: int, legs: int, comps: dict) -> "LinOp":
        """Build from ``{(row multi-index, col multi-index): value}``."""
        op = cls.zeros(N, legs)
        for (r, c), v in comps.items():
            op.data[flat_index(r, N), flat_index(c, N)] = qrat(v)
        return op

    @classmethod
    def flip(cls, N: int) -> "LinOp":
        return cls.from_components(N, 2, {((i, j), (j, i)): 1 for i in range(N) for j in range(N)})

    def inverse(self) -> "LinOp":
        inv = linalg.inverse([list(r) for r in self.data])
        return LinOp(self.N, self.legs, inv)

    def trace(self) -> QRat:
        tot = ZERO
        for i in range(self.dim):
            tot = tot + self.data[i, i]
        return tot

    def is_scalar(self) -> bool:
        d = self.data[0, 0]
        return self == LinOp.identity(self.N, self.legs).scale(d)

    def map_scalars(self, f) -> "LinOp":
        return self.map_entries(f)

    def rank(self) -> int:
        rows = [{j: v for j, v in enumerate(r) if v} for r in self.data]
        return linalg.rank(rows)

    def kron(self, other: "LinOp") -> "LinOp":
        if other.N != self.N:
            raise ValueError("kron needs the same site dimension")
        d2 = other.dim
        out = np.empty((self.dim * d2, self.dim * d2), dtype=object)
        out.fill(ZERO)
        onz = list(other.nonzero())
        for i, j, v in self.nonzero():
            for a, b, w in onz:
                out[i * d2 + a, j * d2 + b] = v * w
        return LinOp(self.N, self.legs + other.legs, out)

    # -- serialisation --------------------------------------------------
    def to_json(self) -> dict:
        return {
            "N": self.N,
            "legs": self.legs,
            "rows": [[format_qrat(v) for v in row] for row in self.data],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LinOp":
        rows = [[parse(s) for s in row] for row in obj["rows"]]
        return cls(int(obj["N"]), int(obj["legs"]), rows)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def __repr__(self):
        return f"LinOp(N={self.N}, legs={self.legs})"


class MatOverAlg(TensorOp):
    """Operator-shaped matrix whose entries are :class:`NCPoly` elements."""

    zero = ZERO_POLY

    def __init__(self, N: int, legs: int, data):
        super().__init__(N, legs, data)
        flat = self.data.ravel()
        for i, v in enumerate(flat):
            if isinstance(v, (QRat, int)):
                flat[i] = NCPoly.const(v)

    @classmethod
    def from_linop(cls, op: LinOp) -> "MatOverAlg":
        return cls(op.N, op.legs, op.data.copy())

    @classmethod
    def zeros(cls, N: int, legs: int = 1) -> "MatOverAlg":
        dim = N ** legs
        data = np.empty((dim, dim), dtype=object)
        data.fill(ZERO_POLY)
        return cls(N, legs, data)

    def scale(self, c) -> "MatOverAlg":
        c = qrat(c)
        return self.map_entries(lambda v: v.scale(c))

    def times_element(self, x: NCPoly, side: str = "right") -> "MatOverAlg":
        """Multiply every entry by an algebra element on the given side."""
        if side == "right":
            return self.map_entries(lambda v: v * x)
        return self.map_entries(lambda v: x * v)

    def max_degree(self) -> int:
        return max((v.degree() for _, _, v in self.nonzero()), default=-1)

    def __repr__(self):
        return f"MatOverAlg(N={self.N}, legs={self.legs})"


def place_on_legs(op: TensorOp, total: int, start: int) -> TensorOp:
    """``I^{(x)(start-1)} (x) op (x) I^{(x)rest}`` on ``total`` legs (``start`` 1-based)."""
    j = op.legs
    if start < 1 or start + j - 1 > total:
        raise ValueError(f"cannot place a {j}-leg operator at leg {start} of {total}")
    N = op.N
    left = N ** (start - 1)
    right = N ** (total - start - j + 1)
    dim = N ** total
    mid = op.dim
    out = np.empty((dim, dim), dtype=object)
    out.fill(op.zero)
    for r, c, v in op.nonzero():
        for a in range(left):
            for b in range(right):
                out[(a * mid + r) * right + b, (a * mid + c) * right + b] = v
    return type(op)(N, total, out)


def partial_trace(op: TensorOp, leg: int):
    return op.partial_trace(leg)


def r_trace(op: TensorOp, legs: Iterable[int], C: LinOp):
    return op.r_trace(legs, C)


def conjugation_invariance_check(X: LinOp, R: LinOp, C: LinOp) -> bool:
    """``Tr_R(2)(R^-1 X_1 R) = Tr_R(2)(R X_1 R^-1) = Tr_R(X) I`` exactly."""
    if X.legs != 1 or R.legs != 2:
        raise ValueError("X must act on one leg and R on two")
    Rinv = R.inverse()
    X1 = place_on_legs(X, 2, 1)
    lhs1 = (Rinv @ X1 @ R).r_trace([2], C)
    lhs2 = (R @ X1 @ Rinv).r_trace([2], C)
    rhs = LinOp.identity(X.N).scale((X @ C).trace())
    return lhs1 == rhs and lhs2 == rhs
