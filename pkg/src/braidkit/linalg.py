"""Exact linear algebra over Q(q).

Vectors are sparse ``dict[int, QRat]`` keyed by column index; the column order
is the caller's and decides which coordinates become pivots.  :class:`Echelon`
keeps rows normalised to leading coefficient one and, optionally, records how
each stored row was assembled from the inserted vectors so that membership
answers come with a witness.

:func:`rank_fraction_free` is a separate dense routine working over the
polynomial ring only; it exists so that ranks can be cross-checked by a second
code path.
"""

from __future__ import annotations

import heapq
from typing import Hashable, Iterable, Sequence

from ._backend import Poly, make_poly
from .scalars import ONE, ZERO, QRat

Vec = dict  # dict[int, QRat]


def axpy(y: Vec, a: QRat, x: Vec) -> None:
    """In place ``y += a * x``; drops zeros."""
    for k, v in x.items():
        w = y.get(k)
        t = a * v if w is None else w + a * v
        if t.is_zero():
            if w is not None:
                del y[k]
        else:
            y[k] = t


class Echelon:
    """Incremental row echelon form with optional combination tracking."""

    def __init__(self, track: bool = False):
        self.track = track
        self.rows: dict[int, Vec] = {}
        self.combos: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def reduce(self, vec: Vec, combo: dict | None = None):
        """Return ``(remainder, combo)`` with ``vec = remainder + sum(combo[t] * inserted[t])``.

        The remainder has no entry in any pivot column, so it is a normal
        form for ``vec`` modulo the row space.
        """
        vec = {k: v for k, v in vec.items() if not v.is_zero()}
        combo = dict(combo) if combo is not None else ({} if self.track else None)
        heap = list(vec)
        heapq.heapify(heap)
        seen = set(heap)
        while heap:
            col = heapq.heappop(heap)
            seen.discard(col)
            c = vec.get(col)
            if c is None:
                continue
            row = self.rows.get(col)
            if row is None:
                continue
            for k in row:
                if k not in seen and k != col and k not in vec:
                    heapq.heappush(heap, k)
                    seen.add(k)
            axpy(vec, -c, row)
            if combo is not None:
                for t, a in self.combos[col].items():
                    w = combo.get(t, ZERO) + c * a
                    if w.is_zero():
                        combo.pop(t, None)
                    else:
                        combo[t] = w
        return vec, combo

    def add(self, vec: Vec, tag: Hashable | None = None) -> bool:
        """Insert a vector; True when it enlarged the row space."""
        start = {tag: ONE} if self.track else None
        rem, combo = self.reduce(vec, None)
        if self.track:
            # reduce() records what was subtracted; flip into "rem = vec - ..."
            combo = {t: -a for t, a in combo.items()}
            combo[tag] = combo.get(tag, ZERO) + ONE
        if not rem:
            return False
        piv = min(rem)
        inv = rem[piv].inverse()
        row = {k: v * inv for k, v in rem.items()}
        self.rows[piv] = row
        if self.track:
            self.combos[piv] = {t: a * inv for t, a in combo.items() if not a.is_zero()}
        return True

    def contains(self, vec: Vec) -> bool:
        rem, _ = self.reduce(vec)
        return not rem

    def express(self, vec: Vec):
        """Coefficients over the inserted tags if ``vec`` is in the span, else None."""
        if not self.track:
            raise ValueError("Echelon built without tracking")
        rem, combo = self.reduce(vec, {})
        if rem:
            return None
        return {t: a for t, a in combo.items() if not a.is_zero()}


def rank(rows: Iterable[Vec]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def rank_fraction_free(rows: Sequence[Sequence[QRat]]) -> int:
    """Rank of a dense matrix by fraction-free elimination over Q[q].

    Each row is first cleared of denominators; afterwards only polynomial
    ring operations and content removal are used.
    """
    work = []
    for r in rows:
        den = make_poly([1])
        for x in r:
            if not x.is_zero() and x.den.degree() > 0:
                den = den * (x.den // den.gcd(x.den))
        prow = [x.num * (den // x.den) if not x.is_zero() else make_poly([]) for x in r]
        if any(not p.is_zero() for p in prow):
            work.append(prow)
    if not work:
        return 0
    ncols = len(work[0])
    rk = 0
    for col in range(ncols):
        piv = None
        for i in range(rk, len(work)):
            if not work[i][col].is_zero():
                piv = i
                break
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        p = work[rk]
        a = p[col]
        for i in range(rk + 1, len(work)):
            b = work[i][col]
            if b.is_zero():
                continue
            row = [a * x - b * y for x, y in zip(work[i], p)]
            g = None
            for x in row:
                if not x.is_zero():
                    g = x if g is None else g.gcd(x)
                    if g.degree() == 0:
                        break
            if g is not None and g.degree() > 0:
                row = [x // g for x in row]
            work[i] = row
        rk += 1
    return rk


def inverse(mat: Sequence[Sequence[QRat]]) -> list[list[QRat]]:
    """Gauss-Jordan inverse of a square matrix; raises ZeroDivisionError if singular."""
    n = len(mat)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((i for i in range(col, n) if not aug[i][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def nullspace(columns: Sequence[Vec], ncols: int) -> list[list[QRat]]:
    """Basis of ``{c : sum_k c[k] * columns[k] = 0}``.

    ``columns`` are sparse vectors (the images of the unknowns); the result
    is a list of dense coefficient vectors of length ``ncols``.
    """
    # Row-reduce the transposed system: unknown k has image columns[k].
    ech = Echelon(track=True)
    basis = []
    for k in range(ncols):
        rem, combo = ech.reduce(columns[k], {})
        if rem:
            ech.add(columns[k], tag=k)
        else:
            vec = [ZERO] * ncols
            vec[k] = ONE
            for t, a in combo.items():
                vec[t] = vec[t] - a
            basis.append(vec)
    return basis
