"""Univariate polynomial kernels over the rationals.

Two interchangeable implementations back :class:`braidkit.scalars.QRat`:

* ``flint``  -- ``python-flint``'s ``fmpq_poly`` (C, default when importable);
* ``python`` -- :class:`PyPoly`, a dense list-of-``Fraction`` reference.

Select with the environment variable ``BRAIDKIT_BACKEND`` before import.
Both expose the same small surface: arithmetic operators, ``divmod``,
``gcd`` (monic), ``degree`` (``-1`` for zero), ``coeffs``, ``is_zero``,
indexing and evaluation by call.
"""

from __future__ import annotations

import os
from fractions import Fraction


class PyPoly:
    """Dense polynomial with ``Fraction`` coefficients, lowest degree first."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self._c = c

    @classmethod
    def _raw(cls, c):
        while c and not c[-1]:
            c.pop()
        p = cls.__new__(cls)
        p._c = c
        return p

    @staticmethod
    def _coerce(other):
        if isinstance(other, PyPoly):
            return other
        return PyPoly([other])

    def degree(self):
        return len(self._c) - 1

    def coeffs(self):
        return list(self._c)

    def is_zero(self):
        return not self._c

    def is_one(self):
        return len(self._c) == 1 and self._c[0] == 1

    def __getitem__(self, i):
        return self._c[i] if 0 <= i < len(self._c) else Fraction(0)

    def __eq__(self, other):
        if not isinstance(other, PyPoly):
            try:
                other = PyPoly([other])
            except TypeError:
                return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c))

    def __add__(self, other):
        a, b = self._c, self._coerce(other)._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return PyPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return PyPoly._raw([-x for x in self._c])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        a, b = self._c, self._coerce(other)._c
        if not a or not b:
            return PyPoly._raw([])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PyPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = PyPoly._raw([Fraction(1)]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        b = self._coerce(other)._c
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self._c)
        db = len(b) - 1
        lead = b[-1]
        if len(r) <= db:
            return PyPoly._raw([]), PyPoly._raw(r)
        quo = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] / lead
            quo[k] = c
            if c:
                for j, y in enumerate(b):
                    r[k + j] -= c * y
        return PyPoly._raw(quo), PyPoly._raw(r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def gcd(self, other):
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        lead = a._c[-1]
        return PyPoly._raw([x / lead for x in a._c])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"PyPoly({[str(c) for c in self._c]})"


def _select():
    name = os.environ.get("BRAIDKIT_BACKEND", "").strip().lower()
    if name in ("", "flint"):
        try:
            import flint

            return "flint", flint.fmpq_poly
        except ImportError:
            if name == "flint":
                raise
    elif name != "python":
        raise ValueError(f"unknown BRAIDKIT_BACKEND {name!r}")
    return "python", PyPoly


BACKEND, Poly = _select()


def to_fraction(c) -> Fraction:
    """Coefficient of either backend as a ``Fraction``."""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    return Fraction(int(c.p), int(c.q))


def make_poly(coeffs) -> "Poly":
    if BACKEND == "flint":
        import flint

        return Poly([flint.fmpq(int(Fraction(c).numerator), int(Fraction(c).denominator)) for c in coeffs])
    return Poly(coeffs)


def poly_coeffs(p) -> list[Fraction]:
    return [to_fraction(c) for c in p.coeffs()]


def evaluate(p, x: Fraction) -> Fraction:
    if BACKEND == "flint":
        import flint

        return to_fraction(p(flint.fmpq(x.numerator, x.denominator)))
    return p(x)
