"""Exact scalars: arbitrary-precision rationals and real quadratic extensions.

Every interval endpoint, matrix entry and certificate coefficient in this
package is either a rational number or an element of a single real quadratic
field Q(sqrt(d)).  Rationals are ``fractions.Fraction``; the class
:class:`QuadExt` represents ``a + b*sqrt(d)`` with ``a, b`` rational and ``d``
a square-free positive integer.  Sign determination is purely rational (no
floating point), so every comparison made here is unconditional.

Values with different radicands do not mix: arithmetic between ``Q(sqrt(2))``
and ``Q(sqrt(3))`` raises :class:`RadicandMismatch`.  A value with ``b == 0``
is rational and combines with any radicand.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rat = Fraction

RatLike = Union[int, Fraction]


class RadicandMismatch(ValueError):
    """Arithmetic attempted between elements of different quadratic fields."""


def _squarefree_split(d: int) -> tuple[int, int]:
    """Return (s, f) with d = s^2 * f and f square-free, by trial division."""
    if d <= 0:
        raise ValueError(f"radicand must be positive, got {d}")
    s, f, p = 1, 1, 2
    n = d
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            f *= p
        p += 1 if p == 2 else 2
    return s, f * n


class QuadExt:
    """An exact element a + b*sqrt(d) of a real quadratic field.

    ``d`` is normalized to be square-free, and to 0 whenever ``b == 0`` (the
    rational embedding).  Instances are immutable and hashable; a rational
    QuadExt hashes like the underlying Fraction.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: RatLike = 0, b: RatLike = 0, d: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        if b != 0:
            if d == 0:
                raise ValueError("irrational part requires a radicand")
            s, f = _squarefree_split(d)
            if f == 1:
                a, b, d = a + b * s, Fraction(0), 0
            else:
                b, d = b * s, f
        else:
            d = 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def root(d: int, coeff: RatLike = 1) -> "QuadExt":
        """coeff * sqrt(d)."""
        return QuadExt(0, coeff, d)

    @staticmethod
    def of(value: "QuadExt | RatLike") -> "QuadExt":
        if isinstance(value, QuadExt):
            return value
        return QuadExt(value)

    # -- predicates --------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    # -- radicand handling -------------------------------------------------

    def _join(self, other: "QuadExt") -> int:
        if self.d == 0:
            return other.d
        if other.d == 0 or other.d == self.d:
            return self.d
        raise RadicandMismatch(f"sqrt({self.d}) vs sqrt({other.d})")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join(other)
        return QuadExt(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self._join(other)
        if self.b == 0 and other.b == 0:
            return QuadExt(self.a * other.a)
        a = self.a * other.a + self.b * other.b * d
        b = self.a * other.b + self.b * other.a
        return QuadExt(a, b, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        if not self:
            raise ZeroDivisionError("QuadExt division by zero")
        if self.b == 0:
            return QuadExt(1 / self.a)
        n = self.a * self.a - self.b * self.b * self.d
        # n = 0 would mean sqrt(d) rational, impossible for square-free d > 1
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._join(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("QuadExt powers must be non-negative integers")
        out = QuadExt(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    # -- exact sign and order ----------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}, decided by rational comparisons only."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with d*b^2
        t = a * a - self.d * b * b
        big = (t > 0) - (t < 0)
        return big if a > 0 else -big

    def _cmp(self, other) -> int:
        other = _coerce(other)
        if other is NotImplemented:
            raise TypeError("cannot compare QuadExt with this type")
        return (self - other).sign()

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    # -- conversions -------------------------------------------------------

    def __float__(self) -> float:
        if self.b == 0:
            return float(self.a)
        # refine sqrt(d) rationally only when float precision is in doubt
        return float(self.a) + float(self.b) * self.d ** 0.5

    def rational_part(self) -> Fraction:
        return self.a

    def as_rational(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def __repr__(self):
        return f"QuadExt({self})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        rad = f"sqrt({self.d})" if abs(self.b) == 1 else f"{abs(self.b)}*sqrt({self.d})"
        sgn = "-" if self.b < 0 else "+"
        if self.a == 0:
            return rad if self.b > 0 else f"-{rad}"
        return f"{self.a} {sgn} {rad}"


def _coerce(value) -> "QuadExt":
    if isinstance(value, QuadExt):
        return value
    if isinstance(value, (int, Fraction)):
        return QuadExt(value)
    return NotImplemented


ZERO = QuadExt(0)
ONE = QuadExt(1)


def qext_sign(x: QuadExt) -> int:
    """Exact sign of a + b*sqrt(d) in {-1, 0, +1}."""
    return QuadExt.of(x).sign()


def qext_arith(x: QuadExt, y: QuadExt, op: str) -> QuadExt:
    """Named field operations: op in {add, sub, mul, div}."""
    x, y = QuadExt.of(x), QuadExt.of(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


def qe(a: RatLike = 0, b: RatLike = 0, d: int = 0) -> QuadExt:
    """Shorthand constructor for a + b*sqrt(d)."""
    return QuadExt(a, b, d)


# -- text grammar ------------------------------------------------------------
#
# literal  :=  term (("+"|"-") term)*
# term     :=  rational | rational "*" "sqrt(" int ")" | "sqrt(" int ")"
# rational :=  ["-"] int ["/" int]

_TOKEN = re.compile(r"\s*(\d+|sqrt|[()+\-*/])")


def _tokenize(text: str) -> list[str]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad scalar literal near {text[pos:]!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_quadext(text: str) -> QuadExt:
    """Parse the scalar literal grammar, e.g. ``2*sqrt(2)`` or ``-3 + 1/7*sqrt(10)``."""
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(toks):
            raise ValueError(f"unexpected end of literal {text!r}")
        tok = toks[pos]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r}, got {tok!r} in {text!r}")
        pos += 1
        return tok

    def rational() -> Fraction:
        num = int(take())
        if peek() == "/":
            take("/")
            return Fraction(num, int(take()))
        return Fraction(num)

    def term() -> QuadExt:
        if peek() == "sqrt":
            take("sqrt")
            take("(")
            d = int(take())
            take(")")
            return QuadExt.root(d)
        coeff = rational()
        if peek() == "*":
            take("*")
            take("sqrt")
            take("(")
            d = int(take())
            take(")")
            return QuadExt.root(d, coeff)
        return QuadExt(coeff)

    sign = 1
    if peek() in ("+", "-"):
        sign = -1 if take() == "-" else 1
    value = term() * sign
    while peek() in ("+", "-"):
        sign = -1 if take() == "-" else 1
        value = value + term() * sign
    if pos != len(toks):
        raise ValueError(f"trailing tokens in scalar literal {text!r}")
    return value
