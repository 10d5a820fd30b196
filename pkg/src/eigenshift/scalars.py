"""Scalar arithmetic: floating complex numbers and exact quadratic-field values.

Exact entries live in an imaginary quadratic field: values a + b*sqrt(d) with
rational a, b and d in {-1, -3}.  d = -1 gives the Gaussian rationals (entries
of the i-kind digraph matrices), d = -3 gives the field containing the
primitive sixth root of unity (1 + sqrt(-3))/2, which the omega-kind digraph
matrices need.  Floating values are plain Python ``complex``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import FormatError, MixedFieldError

FIELD_COMPLEX = "complex"
FIELD_GAUSS = "q(-1)"
FIELD_OMEGA = "q(-3)"

EXACT_FIELDS = (FIELD_GAUSS, FIELD_OMEGA)
FIELDS = (FIELD_COMPLEX,) + EXACT_FIELDS

_FIELD_TO_D = {FIELD_GAUSS: -1, FIELD_OMEGA: -3}
_D_TO_FIELD = {-1: FIELD_GAUSS, -3: FIELD_OMEGA}


def field_for_d(d: int) -> str:
    return _D_TO_FIELD[d]


def d_for_field(field: str) -> int:
    return _FIELD_TO_D[field]


class QuadExt:
    """Exact element a + b*sqrt(d) of an imaginary quadratic field.

    Rational parts are normalized Fractions, so equality is exact and
    hashing is consistent.  Arithmetic with ints and Fractions lifts them
    into the field; combining two values with different d (both with a
    nonzero irrational part) raises MixedFieldError.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = -1):
        if d not in (-1, -3):
            raise ValueError(f"unsupported field discriminant d={d}")
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt values are immutable")

    # -- field resolution -------------------------------------------------

    def _merge_d(self, other: "QuadExt") -> int:
        if self.d == other.d:
            return self.d
        if other.b == 0:
            return self.d
        if self.b == 0:
            return other.d
        raise MixedFieldError(f"cannot mix sqrt({self.d}) with sqrt({other.d})")

    @staticmethod
    def _lift(value, d: int) -> "QuadExt":
        if isinstance(value, QuadExt):
            return value
        if isinstance(value, (int, Fraction)):
            return QuadExt(value, 0, d)
        return NotImplemented

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._lift(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        d = self._merge_d(other)
        return QuadExt(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = self._lift(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        d = self._merge_d(other)
        return QuadExt(
            self.a * other.a + d * self.b * other.b,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        d = self._merge_d(other)
        norm = other.a * other.a - d * other.b * other.b
        if norm == 0:
            raise ZeroDivisionError("division by zero field element")
        conj = QuadExt(other.a, -other.b, d)
        num = self * conj
        return QuadExt(num.a / norm, num.b / norm, d)

    def __rtruediv__(self, other):
        other = self._lift(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    # -- structure ---------------------------------------------------------

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def abs_squared(self) -> Fraction:
        """|x|^2 = a^2 - d*b^2, exact (d < 0 makes this positive definite)."""
        return self.a * self.a - self.d * self.b * self.b

    @property
    def is_real(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __complex__(self):
        return complex(float(self.a), float(self.b) * math.sqrt(-self.d))

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        return format_scalar(self, field_for_d(self.d))


#: The primitive sixth root of unity (1 + sqrt(-3)) / 2.
OMEGA = QuadExt(Fraction(1, 2), Fraction(1, 2), -3)

#: The imaginary unit as an exact Gaussian element.
I_EXACT = QuadExt(0, 1, -1)


def conjugate(x):
    """Complex conjugation; an involution on every supported scalar type."""
    if isinstance(x, QuadExt):
        return x.conjugate()
    if isinstance(x, complex):
        return x.conjugate()
    return x


def abs_squared(x):
    """x * conjugate(x): exact Fraction for field elements, float otherwise."""
    if isinstance(x, QuadExt):
        return x.abs_squared()
    if isinstance(x, Fraction):
        return x * x
    if isinstance(x, int):
        return Fraction(x * x)
    z = complex(x)
    return z.real * z.real + z.imag * z.imag


# -- textual scalar syntax ---------------------------------------------------
#
# Floats:  R, R+Ri, R-Ri             (R a decimal float literal)
# Exact:   p/q, p/q+p/q*s, p/q-p/q*s (s denotes sqrt(d); integers allowed)

_FLOAT = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?"
_COMPLEX_RE = re.compile(rf"^([-+]?{_FLOAT})(?:([+-])({_FLOAT})i)?$")
_EXACT_RE = re.compile(r"^([-+]?\d+(?:/\d+)?)(?:([+-])(\d+(?:/\d+)?)\*s)?$")


def parse_scalar(token: str, field: str):
    """Parse one scalar token in the syntax of the given field.

    Raises FormatError (with a placeholder source/line that callers relocate)
    on malformed tokens.
    """
    if field == FIELD_COMPLEX:
        m = _COMPLEX_RE.match(token)
        if not m:
            raise FormatError("<scalar>", 0, token, "malformed complex scalar")
        re_part = float(m.group(1))
        if m.group(2) is None:
            return complex(re_part, 0.0)
        im = float(m.group(3))
        return complex(re_part, im if m.group(2) == "+" else -im)
    if field in EXACT_FIELDS:
        m = _EXACT_RE.match(token)
        if not m:
            raise FormatError("<scalar>", 0, token, "malformed exact scalar")
        a = Fraction(m.group(1))
        b = Fraction(0)
        if m.group(2) is not None:
            b = Fraction(m.group(3))
            if m.group(2) == "-":
                b = -b
        return QuadExt(a, b, d_for_field(field))
    raise ValueError(f"unknown field {field!r}")


def format_scalar(value, field: str) -> str:
    """Render a scalar to the token syntax accepted by parse_scalar."""
    if field == FIELD_COMPLEX:
        z = complex(value)
        if z.imag == 0:
            return repr(z.real)
        sign = "+" if z.imag >= 0 else "-"
        return f"{z.real!r}{sign}{abs(z.imag)!r}i"
    if field in EXACT_FIELDS:
        if isinstance(value, (int, Fraction)):
            value = QuadExt(value, 0, d_for_field(field))
        if value.b == 0:
            return str(value.a)
        sign = "+" if value.b > 0 else "-"
        return f"{value.a}{sign}{abs(value.b)}*s"
    raise ValueError(f"unknown field {field!r}")
