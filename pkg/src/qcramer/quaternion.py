"""Exact quaternion scalars over the rationals.

Multiplication follows the Hamilton convention ``ij = k, jk = i, ki = j``.
Every component is a :class:`fractions.Fraction`, so all arithmetic is exact
and equality is component-wise.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import ParseError, ZeroDivisorError

__all__ = ["Quaternion", "ZERO", "ONE", "I", "J", "K", "as_quaternion", "format_fraction"]

_UNITS = ("", "i", "j", "k")


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class Quaternion:
    """Immutable quaternion ``a0 + a1 i + a2 j + a3 k`` with rational parts."""

    __slots__ = ("_c", "_hash")

    def __init__(self, a0=0, a1=0, a2=0, a3=0):
        self._c = (_frac(a0), _frac(a1), _frac(a2), _frac(a3))
        self._hash = None

    @classmethod
    def _raw(cls, c: tuple) -> "Quaternion":
        q = object.__new__(cls)
        q._c = c
        q._hash = None
        return q

    @property
    def a0(self) -> Fraction:
        return self._c[0]

    @property
    def a1(self) -> Fraction:
        return self._c[1]

    @property
    def a2(self) -> Fraction:
        return self._c[2]

    @property
    def a3(self) -> Fraction:
        return self._c[3]

    @property
    def components(self) -> tuple:
        return self._c

    def __iter__(self):
        return iter(self._c)

    def is_zero(self) -> bool:
        return not any(self._c)

    def is_real(self) -> bool:
        return not (self._c[1] or self._c[2] or self._c[3])

    def conj(self) -> "Quaternion":
        a, b, c, d = self._c
        return Quaternion._raw((a, -b, -c, -d))

    def norm_sq(self) -> Fraction:
        a, b, c, d = self._c
        return a * a + b * b + c * c + d * d

    def inverse(self) -> "Quaternion":
        n = self.norm_sq()
        if not n:
            raise ZeroDivisorError("the zero quaternion has no inverse")
        a, b, c, d = self._c
        return Quaternion._raw((a / n, -b / n, -c / n, -d / n))

    # arithmetic

    def __add__(self, other):
        o = as_quaternion(other, strict=False)
        if o is None:
            return NotImplemented
        x, y = self._c, o._c
        return Quaternion._raw((x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]))

    __radd__ = __add__

    def __sub__(self, other):
        o = as_quaternion(other, strict=False)
        if o is None:
            return NotImplemented
        x, y = self._c, o._c
        return Quaternion._raw((x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]))

    def __rsub__(self, other):
        o = as_quaternion(other, strict=False)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        a, b, c, d = self._c
        return Quaternion._raw((-a, -b, -c, -d))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a1, b1, c1, d1 = self._c
            a2, b2, c2, d2 = other._c
            return Quaternion._raw((
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            ))
        if isinstance(other, (int, Rational)):
            s = Fraction(other)
            return Quaternion._raw(tuple(x * s for x in self._c))
        return NotImplemented

    def __rmul__(self, other):
        # real scalars commute with everything
        if isinstance(other, (int, Rational)):
            s = Fraction(other)
            return Quaternion._raw(tuple(s * x for x in self._c))
        return NotImplemented

    def __truediv__(self, other):
        """Right division ``self * other**-1``."""
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisorError("division by zero")
            s = Fraction(other)
            return Quaternion._raw(tuple(x / s for x in self._c))
        if isinstance(other, Quaternion):
            return self * other.inverse()
        return NotImplemented

    def __pow__(self, p: int):
        if not isinstance(p, int):
            return NotImplemented
        if p < 0:
            return self.inverse() ** (-p)
        out, base = ONE, self
        while p:
            if p & 1:
                out = out * base
            base = base * base
            p >>= 1
        return out

    def __eq__(self, other):
        o = as_quaternion(other, strict=False)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._c) if not self.is_real() else hash(self._c[0])
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Quaternion({self.format()!r})"

    def __str__(self):
        return self.format()

    def format(self, decimal: bool = False) -> str:
        """Render as ``a0 + a1i + a2j + a3k`` omitting zero terms."""
        parts = []
        for coeff, unit in zip(self._c, _UNITS):
            if not coeff:
                continue
            mag = abs(coeff)
            if unit and mag == 1:
                body = unit
            else:
                body = format_fraction(mag, decimal) + unit
            if not parts:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str) -> "Quaternion":
        return parse_quaternion(text)


def format_fraction(x: Fraction, decimal: bool = False) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    if decimal:
        d = x.denominator
        twos = fives = 0
        while d % 2 == 0:
            d //= 2
            twos += 1
        while d % 5 == 0:
            d //= 5
            fives += 1
        if d == 1:
            places = max(twos, fives)
            scaled = abs(x.numerator) * 10**places // x.denominator
            s = str(scaled).rjust(places + 1, "0")
            sign = "-" if x < 0 else ""
            return f"{sign}{s[:-places]}.{s[-places:]}"
    return f"{x.numerator}/{x.denominator}"


ZERO = Quaternion()
ONE = Quaternion(1)
I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)


def as_quaternion(x, strict: bool = True):
    """Coerce ints, rationals and literal strings to :class:`Quaternion`."""
    if isinstance(x, Quaternion):
        return x
    if isinstance(x, (int, Rational)):
        return Quaternion._raw((Fraction(x), Fraction(0), Fraction(0), Fraction(0)))
    if isinstance(x, str):
        return parse_quaternion(x)
    if isinstance(x, (tuple, list)) and len(x) == 4:
        return Quaternion(*x)
    if strict:
        raise TypeError(f"cannot convert {type(x).__name__} to Quaternion")
    return None


# literal grammar: a sum of signed terms, each "coeff", "coeff unit", or "unit";
# coeff is an integer, p/q, a terminating decimal, or a parenthesised rational
_NUM = r"(?:\(\s*[+-]?\s*\d+(?:\s*/\s*\d+)?\s*\)|\d+\s*/\s*\d+|\d*\.\d+|\d+\.?)"
_TERM = re.compile(
    rf"\s*(?P<sign>[+-])?\s*(?:(?P<num>{_NUM})\s*\*?\s*(?P<unit1>[ijk])?|(?P<unit2>[ijk]))\s*"
)


def parse_quaternion(text: str) -> Quaternion:
    s = text.strip()
    if not s:
        raise ParseError("empty quaternion literal", column=1)
    comps = [Fraction(0)] * 4
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected text {s[pos:]!r} in quaternion literal", column=pos + 1)
        if not first and m.group("sign") is None:
            raise ParseError(f"missing '+' or '-' before {s[m.start():m.end()].strip()!r}", column=pos + 1)
        sign = -1 if m.group("sign") == "-" else 1
        num = m.group("num")
        if num is None:
            coeff = Fraction(1)
            unit = m.group("unit2")
        else:
            num = num.strip("() ").replace(" ", "")
            try:
                coeff = Fraction(num)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad coefficient {num!r}: {exc}", column=pos + 1) from None
            unit = m.group("unit1")
        comps[_UNITS.index(unit or "")] += sign * coeff
        pos = m.end()
        first = False
    return Quaternion(*comps)
