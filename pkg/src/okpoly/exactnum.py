"""Exact number tower: rationals and degree-2 surds a + b*sqrt(d).

Rationals are ``fractions.Fraction`` throughout the package.  ``QuadNumber``
adjoins a single square root, which suffices here: every interior wall of a
traced path is rational, and only the right endpoint can be an irrational
root of a rational quadratic.

All values are immutable and all operations pure, so they are safe to share
between concurrently executing computations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError, NoRealRootError

Rational = Fraction

QuadLike = Union[int, Fraction, "QuadNumber"]


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        raise DomainError("negative radicand: %s" % q)
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sgn(q: Fraction) -> int:
    return (q > 0) - (q < 0)


@dataclass(frozen=True)
class QuadNumber:
    """Canonical a + b*sqrt(d) with rational a, b and radicand d >= 0.

    Canonical form: if d is a perfect rational square the surd is folded
    into a and b = d = 0.  Two QuadNumbers interoperate only if their
    radicands agree or one of them is rational.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    d: Fraction = Fraction(0)

    def __post_init__(self):
        a = Fraction(self.a)
        b = Fraction(self.b)
        d = Fraction(self.d)
        if d < 0:
            raise DomainError("negative radicand: %s" % d)
        if b == 0:
            d = Fraction(0)
        else:
            r = rational_sqrt(d)
            if r is not None:
                a, b, d = a + b * r, Fraction(0), Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    # -- construction ------------------------------------------------

    @staticmethod
    def of(x: QuadLike) -> "QuadNumber":
        if isinstance(x, QuadNumber):
            return x
        return QuadNumber(Fraction(x))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise DomainError("%s is irrational" % (self,))
        return self.a

    # -- arithmetic --------------------------------------------------

    def _common_radicand(self, other: "QuadNumber") -> Fraction:
        if self.d == 0:
            return other.d
        if other.d == 0 or other.d == self.d:
            return self.d
        raise DomainError(
            "incompatible radicands: sqrt(%s) vs sqrt(%s)" % (self.d, other.d)
        )

    def __add__(self, other: QuadLike) -> "QuadNumber":
        o = QuadNumber.of(other)
        d = self._common_radicand(o)
        return QuadNumber(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self) -> "QuadNumber":
        return QuadNumber(-self.a, -self.b, self.d)

    def __sub__(self, other: QuadLike) -> "QuadNumber":
        return self + (-QuadNumber.of(other))

    def __rsub__(self, other: QuadLike) -> "QuadNumber":
        return QuadNumber.of(other) - self

    def __mul__(self, other: QuadLike) -> "QuadNumber":
        o = QuadNumber.of(other)
        d = self._common_radicand(o)
        return QuadNumber(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: QuadLike) -> "QuadNumber":
        o = QuadNumber.of(other)
        d = self._common_radicand(o)
        denom = o.a * o.a - o.b * o.b * d
        if denom == 0:
            if o.a == 0 and o.b == 0:
                raise ZeroDivisionError("division by zero QuadNumber")
            raise DomainError("division by non-canonical zero norm")
        # multiply by the conjugate of the divisor
        num = self * QuadNumber(o.a, -o.b, d)
        return QuadNumber(num.a / denom, num.b / denom, d)

    def __rtruediv__(self, other: QuadLike) -> "QuadNumber":
        return QuadNumber.of(other) / self

    # -- order -------------------------------------------------------

    def sign(self) -> int:
        """Exact sign, never using floating point."""
        if self.b == 0:
            return _sgn(self.a)
        if self.a == 0:
            return _sgn(self.b)
        sa, sb = _sgn(self.a), _sgn(self.b)
        if sa == sb:
            return sa
        lhs, rhs = self.a * self.a, self.b * self.b * self.d
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadNumber.of(other)
        if not isinstance(other, QuadNumber):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other: QuadLike) -> bool:
        return (self - QuadNumber.of(other)).sign() < 0

    def __le__(self, other: QuadLike) -> bool:
        return (self - QuadNumber.of(other)).sign() <= 0

    def __gt__(self, other: QuadLike) -> bool:
        return (self - QuadNumber.of(other)).sign() > 0

    def __ge__(self, other: QuadLike) -> bool:
        return (self - QuadNumber.of(other)).sign() >= 0

    def __float__(self) -> float:
        # display only; exact values never flow through this
        return float(self.a) + float(self.b) * math.sqrt(float(self.d))

    def __repr__(self) -> str:
        if self.b == 0:
            return "QuadNumber(%s)" % self.a
        return "QuadNumber(%s + %s*sqrt(%s))" % (self.a, self.b, self.d)


def quad_normalize(a: Fraction, b: Fraction, d: Fraction) -> QuadNumber:
    """Canonical form of a + b*sqrt(d); rejects d < 0."""
    return QuadNumber(Fraction(a), Fraction(b), Fraction(d))


def quad_compare(x: QuadLike, y: QuadLike) -> int:
    """Exact sign of x - y: -1, 0 or +1."""
    return (QuadNumber.of(x) - QuadNumber.of(y)).sign()


def quad_solve(p: Fraction, q: Fraction, r: Fraction, branch: str) -> QuadNumber:
    """Requested real root of p*t^2 + q*t + r = 0 in canonical form.

    branch is "smaller" or "larger"; for a linear equation both return the
    single root.
    """
    if branch not in ("smaller", "larger"):
        raise DomainError("unknown branch %r" % branch)
    p, q, r = Fraction(p), Fraction(q), Fraction(r)
    if p == 0:
        if q == 0:
            raise DomainError("degenerate equation: p = q = 0")
        return QuadNumber(-r / q)
    disc = q * q - 4 * p * r
    if disc < 0:
        raise NoRealRootError("negative discriminant %s" % disc)
    root = QuadNumber(Fraction(0), Fraction(1), disc)
    x1 = (root - q) / (2 * p)
    x2 = (-root - q) / (2 * p)
    lo, hi = (x1, x2) if x1 <= x2 else (x2, x1)
    return lo if branch == "smaller" else hi
