"""Degree-capped membership in a two-sided ideal of the free algebra.

The ideal generated by relations ``s`` is approximated from inside by the
span of all products ``w1 * s * w2`` with ``wt(w1) + wt(s) + wt(w2) <= cap``.
When every relation is homogeneous (for the alphabet weights) the ideal is
graded and each homogeneous component is handled separately; otherwise the
filtered span is used.  Positive answers carry a witness
``[(coeff, w1, relation index, w2), ...]`` which is re-expanded and compared
with the query before it is returned.

:class:`BruteForceOracle` answers the same question by a dense rank
comparison with fraction-free elimination; it shares no code with the
incremental echelon path and is used to cross-check it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .. import linalg
from ..scalars import QRat
from .poly import NCPoly, ZERO_POLY
from .presentation import Presentation


class CapExceeded(ValueError):
    """The query has higher weight than the oracle's cap."""


@dataclass
class Membership:
    member: bool
    witness: list | None = None
    verified: bool = False

    def __bool__(self):
        return self.member


def words_up_to(weights: list[int], cap: int, exact: bool = False):
    """All words with total weight ``<= cap`` (or ``== cap``)."""
    out = [()] if (not exact or cap == 0) else []
    frontier = [((), 0)]
    while frontier:
        nxt = []
        for w, wt in frontier:
            for g, gw in enumerate(weights):
                t = wt + gw
                if t <= cap:
                    ww = w + (g,)
                    nxt.append((ww, t))
                    if not exact or t == cap:
                        out.append(ww)
        frontier = nxt
    return out


class _Columns:
    """Word <-> column index, assigned on first use."""

    def __init__(self):
        self.index: dict = {}

    def vec(self, p: NCPoly) -> dict:
        out = {}
        for w, c in p.terms.items():
            k = self.index.get(w)
            if k is None:
                k = self.index[w] = len(self.index)
            out[k] = c
        return out


class IdealOracle:
    def __init__(self, pres: Presentation, cap: int):
        self.pres = pres
        self.cap = cap
        self.weights = [1] * len(pres.alphabet) if pres.alphabet.weights is None else list(pres.alphabet.weights)
        self.relations = [r for r in pres.relations if r]
        self.rel_weight = [self._wt(r) for r in self.relations]
        self.graded = pres.is_homogeneous()
        self._cols = _Columns()
        self._components: dict = {}

    def _wt(self, p: NCPoly) -> int:
        return max((sum(self.weights[g] for g in w) for w in p.terms), default=-1)

    def _spanning(self, grade: int | None):
        """Tagged products ``w1 s w2`` for one grade (graded) or up to the cap."""
        for idx, (s, ws) in enumerate(zip(self.relations, self.rel_weight)):
            room = (grade if grade is not None else self.cap) - ws
            if room < 0:
                continue
            lefts = words_up_to(self.weights, room)
            for w1 in lefts:
                r1 = sum(self.weights[g] for g in w1)
                for w2 in words_up_to(self.weights, room - r1, exact=grade is not None):
                    yield (w1, idx, w2)

    def product(self, tag) -> NCPoly:
        w1, idx, w2 = tag
        s = self.relations[idx]
        return NCPoly._raw({w1 + w + w2: c for w, c in s.terms.items()})

    def _component(self, grade: int | None) -> linalg.Echelon:
        if grade not in self._components:
            ech = linalg.Echelon(track=True)
            for tag in self._spanning(grade):
                ech.add(self._cols.vec(self.product(tag)), tag)
            self._components[grade] = ech
        return self._components[grade]

    def _parts(self, x: NCPoly):
        if not self.graded:
            return [(None, x)]
        by: dict = {}
        for w, c in x.terms.items():
            by.setdefault(sum(self.weights[g] for g in w), {})[w] = c
        return [(d, NCPoly._raw(t)) for d, t in sorted(by.items())]

    def membership(self, x: NCPoly) -> Membership:
        if x.is_zero():
            return Membership(True, [], True)
        if self._wt(x) > self.cap:
            raise CapExceeded(f"query weight {self._wt(x)} exceeds cap {self.cap}")
        witness = []
        for grade, part in self._parts(x):
            combo = self._component(grade).express(self._cols.vec(part))
            if combo is None:
                return Membership(False)
            witness.extend((c, tag[0], tag[1], tag[2]) for tag, c in combo.items())
        witness.sort(key=lambda t: (t[2], t[1], t[3]))
        ok = self.evaluate_witness(witness) == x
        if not ok:
            raise AssertionError("witness does not reproduce the query")
        return Membership(True, witness, True)

    def contains(self, x: NCPoly) -> bool:
        return self.membership(x).member

    def evaluate_witness(self, witness) -> NCPoly:
        out = ZERO_POLY
        for c, w1, idx, w2 in witness:
            out = out + self.product((w1, idx, w2)).scale(c)
        return out

    def normal_form(self, x: NCPoly) -> NCPoly:
        """Remainder of ``x`` modulo the capped ideal (depends on column order)."""
        out = ZERO_POLY
        inv = None
        for grade, part in self._parts(x):
            rem, _ = self._component(grade).reduce(self._cols.vec(part), {})
            if inv is None or len(inv) != len(self._cols.index):
                inv = {k: w for w, k in self._cols.index.items()}
            out = out + NCPoly._raw({inv[k]: c for k, c in rem.items()})
        return out

    def all_members(self, xs) -> bool:
        return all(self.contains(x) for x in xs)


class BruteForceOracle:
    """Membership by dense rank comparison (fraction-free, polynomial entries)."""

    def __init__(self, pres: Presentation, cap: int):
        self.inner = IdealOracle(pres, cap)
        self._base: dict = {}

    def _rows(self, grade):
        inner = self.inner
        prods = [inner.product(t) for t in inner._spanning(grade)]
        words = sorted({w for p in prods for w in p.terms})
        return prods, words

    def contains(self, x: NCPoly) -> bool:
        inner = self.inner
        if x.is_zero():
            return True
        if inner._wt(x) > inner.cap:
            raise CapExceeded("query weight exceeds cap")
        for grade, part in inner._parts(x):
            if grade not in self._base:
                prods, words = self._rows(grade)
                self._base[grade] = (prods, words, None)
            prods, words, base_rank = self._base[grade]
            extra = sorted(set(part.terms) - set(words))
            if extra:
                return False
            cols = {w: i for i, w in enumerate(words)}
            zero = QRat(0)

            def dense(p):
                row = [zero] * len(words)
                for w, c in p.terms.items():
                    row[cols[w]] = c
                return row

            mat = [dense(p) for p in prods]
            if base_rank is None:
                base_rank = linalg.rank_fraction_free(mat)
                self._base[grade] = (prods, words, base_rank)
            if linalg.rank_fraction_free(mat + [dense(part)]) != base_rank:
                return False
        return True
