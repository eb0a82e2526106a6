"""Noncommutative polynomials over Q(q).

An :class:`NCPoly` maps words (tuples of generator indices) to nonzero
:class:`~braidkit.scalars.QRat` coefficients.  Generator indices are
interpreted by an :class:`Alphabet`, which only matters for printing and for
weights; arithmetic never needs it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from ..scalars import ONE, ZERO, QRat, format_qrat

Word = tuple


class NCPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, QRat] | None = None):
        self.terms: dict[Word, QRat] = {}
        if terms:
            for w, c in terms.items():
                c = c if isinstance(c, QRat) else QRat(c)
                if not c.is_zero():
                    self.terms[tuple(w)] = c

    @classmethod
    def _raw(cls, terms):
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def gen(cls, index: int) -> "NCPoly":
        return cls._raw({(index,): ONE})

    @classmethod
    def const(cls, c) -> "NCPoly":
        c = c if isinstance(c, QRat) else QRat(c)
        return cls._raw({(): c} if not c.is_zero() else {})

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def weight(self, weights: Mapping[int, int] | None) -> int:
        if weights is None:
            return self.degree()
        return max((sum(weights[g] for g in w) for w in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QRat)):
            other = NCPoly.const(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @staticmethod
    def _lift(other):
        if isinstance(other, NCPoly):
            return other
        if isinstance(other, (int, Fraction, QRat)):
            return NCPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w)
            if v is None:
                out[w] = c
            else:
                v = v + c
                if v.is_zero():
                    del out[w]
                else:
                    out[w] = v
        return NCPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: QRat) -> "NCPoly":
        if c.is_zero():
            return ZERO_POLY
        return NCPoly._raw({w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QRat)):
            return self.scale(QRat(other) if not isinstance(other, QRat) else other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = out.get(w)
                t = c1 * c2
                if v is None:
                    out[w] = t
                else:
                    v = v + t
                    if v.is_zero():
                        del out[w]
                    else:
                        out[w] = v
        return NCPoly._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QRat)):
            return self.scale(QRat(other) if not isinstance(other, QRat) else other)
        return NotImplemented

    def commutator(self, other: "NCPoly") -> "NCPoly":
        return self * other - other * self

    def homogeneous_part(self, d: int, weights=None) -> "NCPoly":
        if weights is None:
            return NCPoly._raw({w: c for w, c in self.terms.items() if len(w) == d})
        return NCPoly._raw({w: c for w, c in self.terms.items() if sum(weights[g] for g in w) == d})

    def map_coeffs(self, f) -> "NCPoly":
        return NCPoly({w: f(c) for w, c in self.terms.items()})

    def format(self, alphabet: "Alphabet | None" = None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            mono = " . ".join(alphabet.labels[g] if alphabet else f"g{g}" for g in w) if w else "1"
            parts.append(f"({format_qrat(self.terms[w])})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"NCPoly({self.format()})"


ZERO_POLY = NCPoly._raw({})
ONE_POLY = NCPoly._raw({(): ONE})


@dataclass
class Alphabet:
    """Generator labels, with optional integer weights (default 1 each)."""

    labels: list[str]
    weights: list[int] | None = None
    index: dict[str, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.index = {s: i for i, s in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError("duplicate generator labels")

    def __len__(self):
        return len(self.labels)

    def gen(self, label: str) -> NCPoly:
        return NCPoly.gen(self.index[label])

    def weight_map(self) -> dict[int, int] | None:
        if self.weights is None:
            return None
        return dict(enumerate(self.weights))

    def word_weight(self, word: Word) -> int:
        if self.weights is None:
            return len(word)
        return sum(self.weights[g] for g in word)


def parse_ncpoly(text: str, alphabet: Alphabet) -> NCPoly:
    """Inverse of :meth:`NCPoly.format` for a given alphabet."""
    from ..scalars import parse

    text = text.strip()
    if text == "0":
        return ZERO_POLY
    out = ZERO_POLY
    depth = 0
    chunks, cur = [], []
    i = 0
    # split on top-level " + " separators between "(coeff)*word" terms
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text.startswith(" + (", i):
            chunks.append("".join(cur))
            cur = []
            i += 3
            continue
        cur.append(ch)
        i += 1
    chunks.append("".join(cur))
    for chunk in chunks:
        depth = 0
        for j, ch in enumerate(chunk):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0:
                break
        coeff = parse(chunk[1:j])
        mono = chunk[j + 2:].strip()
        word = () if mono == "1" else tuple(alphabet.index[s.strip()] for s in mono.split(" . "))
        out = out + NCPoly._raw({word: coeff})
    return out
