"""Exact arithmetic in the field Q(q) of rational functions in ``q``.

A :class:`QRat` is stored as a reduced fraction ``num/den`` of polynomials
in ``q`` with rational coefficients, ``den`` monic.  That representation is
canonical, so equality is structural.  The Laurent view used for printing
(``q^shift * A/D`` with ``A(0) != 0``, ``D(0) != 0``, ``D`` monic) is derived
on demand.

Text grammar (round-trips through :func:`parse` / ``str``)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ('+' | '-') factor | atom ('^' ['-'] INT)?
    atom   := INT | 'q' | '(' expr ')'
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

from ._backend import Poly, evaluate, make_poly, poly_coeffs, to_fraction


class PoleError(ArithmeticError):
    """Evaluation point is a root of the denominator."""


class ZeroQError(ArithmeticError):
    """``q = 0`` is not an admissible value of the deformation parameter."""


_PZERO = make_poly([])
_PONE = make_poly([1])
_PQ = make_poly([0, 1])


def _valuation(p) -> int:
    for i, c in enumerate(p.coeffs()):
        if c:
            return i
    return 0


class QRat:
    """Element of Q(q).  Immutable; supports ``+ - * / **`` with ints and Fractions."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, QRat):
            self.num, self.den = value.num, value.den
        else:
            f = Fraction(value)
            self.num = make_poly([f]) if f else _PZERO
            self.den = _PONE
        self._hash = None

    @classmethod
    def _make(cls, num, den):
        """Build from polynomials, reducing to canonical form."""
        if num.is_zero():
            return ZERO
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if den.degree() > 0:
            g = num.gcd(den)
            if not g.is_one():
                num = num // g
                den = den // g
        lead = den[den.degree()]
        if lead != 1:
            inv = 1 / lead
            num = num * inv
            den = den * inv
        return cls._raw(num, den)

    @classmethod
    def _raw(cls, num, den):
        x = object.__new__(cls)
        x.num = num
        x.den = den
        x._hash = None
        return x

    @classmethod
    def from_coeffs(cls, num_coeffs, den_coeffs=(1,), shift: int = 0) -> "QRat":
        """``q^shift * sum(num_coeffs[i] q^i) / sum(den_coeffs[i] q^i)``."""
        num = make_poly(num_coeffs)
        den = make_poly(den_coeffs)
        if shift > 0:
            num = num * make_poly([0] * shift + [1])
        elif shift < 0:
            den = den * make_poly([0] * (-shift) + [1])
        return cls._make(num, den)

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return to_fraction(self.num[0]) if not self.num.is_zero() else Fraction(0)

    def __bool__(self):
        return not self.num.is_zero()

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _lift(other):
        if isinstance(other, QRat):
            return other
        if isinstance(other, (int, Fraction)):
            return QRat(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            num = self.num + other.num
            if self.den.degree() == 0:
                return QRat._raw(num, self.den) if not num.is_zero() else ZERO
            return QRat._make(num, self.den)
        return QRat._make(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(-self.num, self.den)

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

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.degree() == 0 and other.den.degree() == 0:
            return QRat._raw(self.num * other.num, _PONE)
        # cross-cancel before multiplying keeps intermediate degrees small
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d2.degree() > 0:
            g = n1.gcd(d2)
            if not g.is_one():
                n1, d2 = n1 // g, d2 // g
        if d1.degree() > 0:
            g = n2.gcd(d1)
            if not g.is_one():
                n2, d1 = n2 // g, d1 // g
        num, den = n1 * n2, d1 * d2
        lead = den[den.degree()]
        if lead != 1:
            inv = 1 / lead
            num, den = num * inv, den * inv
        return QRat._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return QRat._make(self.den, self.num)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return QRat._raw(self.num ** k, self.den ** k) if k else ONE

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant())
            else:
                self._hash = hash((tuple(poly_coeffs(self.num)), tuple(poly_coeffs(self.den))))
        return self._hash

    # -- Laurent view ---------------------------------------------------
    def laurent(self) -> tuple[int, list[Fraction], list[Fraction]]:
        """``(shift, A, D)`` with value ``q^shift * A(q)/D(q)``, ``A(0), D(0) != 0``."""
        if self.num.is_zero():
            return 0, [], [Fraction(1)]
        a = poly_coeffs(self.num)
        d = poly_coeffs(self.den)
        va = next(i for i, c in enumerate(a) if c)
        vd = next(i for i, c in enumerate(d) if c)
        return va - vd, a[va:], d[vd:]

    def is_laurent_polynomial(self) -> bool:
        return len(self.laurent()[2]) == 1

    def laurent_terms(self) -> dict[int, Fraction]:
        """Exponent -> coefficient, for Laurent polynomials only."""
        shift, a, d = self.laurent()
        if len(d) != 1:
            raise ValueError(f"{self} is not a Laurent polynomial")
        return {shift + i: c for i, c in enumerate(a) if c}

    def substitute(self, value: "QRat") -> "QRat":
        """Replace ``q`` by another element of Q(q)."""
        value = QRat(value)

        def horner(coeffs):
            acc = ZERO
            for c in reversed(coeffs):
                acc = acc * value + c
            return acc

        den = horner(poly_coeffs(self.den))
        if den.is_zero():
            raise PoleError(f"{self} has a pole at q = {value}")
        return horner(poly_coeffs(self.num)) / den

    def __str__(self):
        return format_qrat(self)

    def __repr__(self):
        return f"QRat('{format_qrat(self)}')"


ZERO = QRat._raw(_PZERO, _PONE)
ONE = QRat._raw(_PONE, _PONE)
Q = QRat._raw(_PQ, _PONE)


def qrat(value) -> QRat:
    """Coerce ints, Fractions, strings and QRats to :class:`QRat`."""
    if isinstance(value, QRat):
        return value
    if isinstance(value, str):
        return parse(value)
    return QRat(value)


@lru_cache(maxsize=None)
def _qnum_symbolic(k: int) -> QRat:
    if k == 0:
        return ZERO
    if k < 0:
        return -_qnum_symbolic(-k)
    # q^(k-1) + q^(k-3) + ... + q^(1-k)
    coeffs = [0] * (2 * k - 1)
    for j in range(0, 2 * k - 1, 2):
        coeffs[j] = 1
    return QRat.from_coeffs(coeffs, shift=1 - k)


def qnum(k: int, q: QRat | None = None) -> QRat:
    """The q-number ``(q^k - q^-k)/(q - q^-1)``; at ``q = 1`` this is ``k``."""
    base = _qnum_symbolic(int(k))
    return base if q is None else base.substitute(q)


def qfact(k: int, q: QRat | None = None) -> QRat:
    if k < 0:
        raise ValueError("q-factorial of a negative integer")
    out = ONE
    for j in range(1, k + 1):
        out = out * qnum(j, q)
    return out


def eval_at(x: QRat, q0) -> Fraction:
    """Exact substitution ``q -> q0`` for a rational ``q0``."""
    q0 = Fraction(q0)
    if q0 == 0:
        raise ZeroQError("q0 must be nonzero")
    x = qrat(x)
    d = evaluate(x.den, q0)
    if d == 0:
        raise PoleError(f"{x} has a pole at q = {q0}")
    return evaluate(x.num, q0) / d


# -- printing -------------------------------------------------------------

def _format_terms(terms: dict[int, int]) -> str:
    out = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(out) if out else "0"


def format_qrat(x: QRat) -> str:
    if x.is_zero():
        return "0"
    shift, a, d = x.laurent()
    scale = 1
    for c in a + d:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    ai = [int(c * scale) for c in a]
    di = [int(c * scale) for c in d]
    g = 0
    for c in ai + di:
        g = math.gcd(g, c)
    ai = [c // g for c in ai]
    di = [c // g for c in di]
    num = _format_terms({shift + i: c for i, c in enumerate(ai) if c})
    if di == [1]:
        return num
    den = _format_terms({i: c for i, c in enumerate(di) if c})
    if sum(1 for c in ai if c) > 1:
        num = f"({num})"
    if sum(1 for c in di if c) > 1 or len(di) > 1:
        den = f"({den})"
    return f"{num}/{den}"


# -- parsing --------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(.))")


def _tokenize(text: str):
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            toks.append(("int", int(m.group(1))))
        else:
            ch = m.group(2)
            if ch not in "q^+-*/()":
                raise ValueError(f"unexpected character {ch!r} in {text!r}")
            toks.append((ch, ch))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind=None):
        if self.i >= len(self.toks):
            raise ValueError(f"unexpected end of input in {self.text!r}")
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ValueError(f"expected {kind!r} in {self.text!r}")
        self.i += 1
        return tok

    def expr(self):
        val = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            rhs = self.factor()
            val = val * rhs if op == "*" else val / rhs
        return val

    def factor(self):
        if self.peek() in ("+", "-"):
            op = self.take()[0]
            val = self.factor()
            return -val if op == "-" else val
        val = self.atom()
        if self.peek() == "^":
            self.take()
            sign = 1
            if self.peek() == "-":
                self.take()
                sign = -1
            val = val ** (sign * self.take("int")[1])
        return val

    def atom(self):
        kind, value = self.take()
        if kind == "int":
            return QRat(value)
        if kind == "q":
            return Q
        if kind == "(":
            val = self.expr()
            self.take(")")
            return val
        raise ValueError(f"unexpected token {value!r} in {self.text!r}")


def parse(text: str) -> QRat:
    p = _Parser(text)
    val = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in {text!r}")
    return val
