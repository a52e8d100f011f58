"""Exact arithmetic in the quadratic field Q(sqrt(-3)).

Every coefficient in the singular-vector corpus and every structure
constant of the mode algebra lives in this field, so all downstream
computations (rank, null spaces, parameter solving) are exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


class QuadScalar:
    """An element a + b*sqrt(-3) with rational a, b.

    Immutable; canonical form is componentwise (zero iff a == b == 0).
    """

    __slots__ = ("a", "b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0) -> None:
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("QuadScalar is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def coerce(cls, x) -> "QuadScalar":
        if isinstance(x, QuadScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to QuadScalar")

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- ring / field operations -------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadScalar(other)
        if not isinstance(other, QuadScalar):
            return NotImplemented
        return QuadScalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadScalar(other)
        if not isinstance(other, QuadScalar):
            return NotImplemented
        return QuadScalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadScalar(self.a * other, self.b * other)
        if not isinstance(other, QuadScalar):
            return NotImplemented
        # (a + b s)(c + d s) with s^2 = -3
        return QuadScalar(
            self.a * other.a - 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadScalar":
        return QuadScalar(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm a^2 + 3 b^2 (always a nonnegative rational)."""
        return self.a * self.a + 3 * self.b * self.b

    def inverse(self) -> "QuadScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt(-3))")
        return QuadScalar(self.a / n, -self.b / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QuadScalar(other)
        if not isinstance(other, QuadScalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadScalar.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadScalar(other)
        if not isinstance(other, QuadScalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    # -- rendering -----------------------------------------------------------

    def __str__(self) -> str:
        return render_scalar(self)

    def __repr__(self) -> str:
        return f"QuadScalar({self.a!r}, {self.b!r})"


ZERO = QuadScalar(0)
ONE = QuadScalar(1)
SQRT_M3 = QuadScalar(0, 1)

#: primitive cube root of unity (-1 + sqrt(-3)) / 2
OMEGA = QuadScalar(Fraction(-1, 2), Fraction(1, 2))

#: the sixth roots of unity contained in Q(sqrt(-3))
ROOTS_OF_UNITY = (
    ONE,
    -OMEGA * OMEGA,
    OMEGA,
    -ONE,
    OMEGA * OMEGA,
    -OMEGA,
)


def _fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render_scalar(x: QuadScalar) -> str:
    """Render in the exchange format ``p/q + (r/s)*s3``."""
    if x.b == 0:
        return _fmt_fraction(x.a)
    s3_part = f"({_fmt_fraction(x.b)})*s3"
    if x.a == 0:
        return s3_part
    return f"{_fmt_fraction(x.a)} + {s3_part}"


_TERM_RE = re.compile(
    r"""^\s*
        (?P<sign>[+-])?\s*
        (?P<sign2>[+-])?\s*
        (?:
            (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<s3a>s3))?
          | (?P<s3b>s3)
        )
        \s*""",
    re.VERBOSE,
)


def parse_scalar(text: str) -> QuadScalar:
    """Parse ``p/q``, ``(r/s)*s3`` or ``p/q + (r/s)*s3`` (signs allowed)."""
    s = text.replace("(", "").replace(")", "")
    pos = 0
    out = ZERO
    seen = False
    while pos < len(s) and s[pos:].strip():
        m = _TERM_RE.match(s[pos:])
        if not m:
            raise ValueError(f"malformed scalar {text!r} at position {pos}")
        if seen and m.group("sign") is None:
            raise ValueError(f"missing sign between terms in {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("sign2") == "-":
            sign = -sign
        if m.group("s3b") is not None:
            coef = Fraction(1)
            is_s3 = True
        else:
            coef = Fraction(m.group("coef"))
            is_s3 = m.group("s3a") is not None
        out = out + (QuadScalar(0, sign * coef) if is_s3 else QuadScalar(sign * coef))
        pos += m.end()
        seen = True
    if not seen:
        raise ValueError(f"empty scalar {text!r}")
    return out
