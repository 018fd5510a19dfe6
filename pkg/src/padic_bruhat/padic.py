"""Capped-relative-precision p-adic numbers.

A non-zero value is ``unit * p**val + O(p**(val + prec))`` with ``unit`` prime
to p and reduced modulo ``p**prec``.  A zero carries only an absolute
precision ``A`` and stands for ``O(p**A)``; internally it is stored with
``unit == 0``, ``val == A`` and ``prec == 0``, so ``val + prec`` is the
absolute precision in every case.

Precision rules: sums keep the smaller absolute precision, products keep the
smaller relative precision, inversion keeps the relative precision.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Union

from .errors import (
    DenominatorZero,
    DivisionByZero,
    InsufficientPrecision,
    ZeroArgument,
)
from .kfield import GF, FFElem, FiniteField

DEFAULT_PRECISION = 64

Rational = Union[int, Fraction]


@functools.lru_cache(maxsize=4096)
def ppow(p: int, k: int) -> int:
    return p**k


def valuation_int(x: int, p: int) -> int:
    """Exponent of p in a non-zero integer."""
    if x == 0:
        raise ValueError("valuation of 0")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


class PAdic:
    __slots__ = ("p", "val", "unit", "prec")

    def __init__(self, p: int, val: int, unit: int, prec: int):
        # No normalisation here; use the constructors below.
        self.p = p
        self.val = val
        self.unit = unit
        self.prec = prec

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, p: int, absprec: int) -> "PAdic":
        return cls(p, absprec, 0, 0)

    @classmethod
    def from_rational(cls, x: Rational, p: int, prec: int = DEFAULT_PRECISION) -> "PAdic":
        x = Fraction(x)
        return padic_from_rational(x.numerator, x.denominator, p, prec)

    @classmethod
    def from_digits(cls, p: int, val: int, digits, prec: int | None = None) -> "PAdic":
        """Inverse of :meth:`digits`; an empty digit list is ``O(p^val)``."""
        digits = list(digits)
        unit = sum(d * p**i for i, d in enumerate(digits))
        if prec is None:
            prec = len(digits)
        if unit == 0:
            return cls.zero(p, val + prec)
        k = valuation_int(unit, p)
        if k >= prec:
            return cls.zero(p, val + prec)
        return cls(p, val + k, (unit // p**k) % ppow(p, prec - k), prec - k)

    # -- basic queries ------------------------------------------------------

    def is_zero(self) -> bool:
        """True when the value is zero to the known precision."""
        return self.unit == 0

    @property
    def absprec(self) -> int:
        return self.val + self.prec

    def valuation(self) -> int:
        if self.unit == 0:
            raise InsufficientPrecision(f"valuation of O({self.p}^{self.val}) is unknown")
        return self.val

    def digits(self) -> list[int]:
        out, u = [], self.unit
        for _ in range(self.prec):
            out.append(u % self.p)
            u //= self.p
        return out

    def to_fraction(self) -> Fraction:
        """The integer-mantissa representative ``unit * p**val`` as a rational."""
        if self.val >= 0:
            return Fraction(self.unit * self.p**self.val)
        return Fraction(self.unit, self.p ** (-self.val))

    def to_json(self) -> dict:
        return {"val": self.val, "digits": self.digits()}

    def __repr__(self):
        p = self.p
        if self.unit == 0:
            return f"O({p}^{self.val})"
        return f"{p}^{self.val} * {self.unit} + O({p}^({self.absprec}))"

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "PAdic":
        if isinstance(other, PAdic):
            if other.p != self.p:
                raise ValueError(f"mixing primes {self.p} and {other.p}")
            return other
        if isinstance(other, (int, Fraction)):
            prec = self.prec if self.unit else max(self.val, 1)
            return PAdic.from_rational(other, self.p, max(prec, 1))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        cap = min(self.val + self.prec, other.val + other.prec)
        if self.unit == 0 or other.unit == 0:
            x = other if self.unit == 0 else self
            if x.unit == 0 or x.val >= cap:
                return PAdic(p, cap, 0, 0)
            n = cap - x.val
            return PAdic(p, x.val, x.unit % ppow(p, n), n)
        va, vb = self.val, other.val
        if va <= vb:
            v = va
            s = self.unit + other.unit * ppow(p, vb - va)
        else:
            v = vb
            s = other.unit + self.unit * ppow(p, va - vb)
        if v >= cap:
            return PAdic(p, cap, 0, 0)
        s %= ppow(p, cap - v)
        if s == 0:
            return PAdic(p, cap, 0, 0)
        if va == vb:
            while s % p == 0:
                s //= p
                v += 1
        return PAdic(p, v, s, cap - v)

    __radd__ = __add__

    def __neg__(self):
        if self.unit == 0:
            return self
        return PAdic(self.p, self.val, ppow(self.p, self.prec) - self.unit, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        if self.unit == 0 or other.unit == 0:
            if self.unit == 0 and other.unit == 0:
                return PAdic(p, self.val + other.val, 0, 0)
            z, x = (self, other) if self.unit == 0 else (other, self)
            return PAdic(p, z.val + x.val, 0, 0)
        n = self.prec if self.prec <= other.prec else other.prec
        return PAdic(p, self.val + other.val, self.unit * other.unit % ppow(p, n), n)

    __rmul__ = __mul__

    def inverse(self) -> "PAdic":
        if self.unit == 0:
            raise DivisionByZero(f"inverse of {self!r}")
        m = ppow(self.p, self.prec)
        return PAdic(self.p, -self.val, pow(self.unit, -1, m), self.prec)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def shift(self, k: int) -> "PAdic":
        """Multiply by p**k exactly."""
        return PAdic(self.p, self.val + k, self.unit, self.prec)

    def __eq__(self, other):
        """Equality to the common known precision."""
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return (self - other).unit == 0

    __hash__ = None

    def lift_to(self, prec: int) -> "PAdic":
        """Re-cap the relative precision at ``prec`` (never adds information)."""
        if self.unit == 0:
            return self
        n = min(prec, self.prec)
        return PAdic(self.p, self.val, self.unit % ppow(self.p, n), n)


# -- functional interface ----------------------------------------------------


def padic_from_rational(num: int, den: int, p: int, N: int = DEFAULT_PRECISION) -> PAdic:
    """The class of num/den with N correct relative digits.

    >>> padic_from_rational(9, 2, 3, 4).digits()
    [2, 1, 1, 1]
    """
    if den == 0:
        raise DenominatorZero("zero denominator")
    if N < 1:
        raise ValueError("precision must be at least 1")
    if num == 0:
        return PAdic.zero(p, N)
    vn = valuation_int(num, p)
    vd = valuation_int(den, p)
    num //= p**vn
    den //= p**vd
    m = ppow(p, N)
    return PAdic(p, vn - vd, num * pow(den, -1, m) % m, N)


def padic_add(a: PAdic, b: PAdic) -> PAdic:
    return a + b


def padic_mul(a: PAdic, b: PAdic) -> PAdic:
    return a * b


def padic_neg(a: PAdic) -> PAdic:
    return -a


def padic_inv(a: PAdic) -> PAdic:
    return a.inverse()


def valuation_at_least(a: PAdic, k: int) -> bool:
    """Decide ``v(a) >= k``; a zero known only modulo p^A with A < k is undecidable."""
    if a.unit:
        return a.val >= k
    if a.val >= k:
        return True
    raise InsufficientPrecision(f"cannot decide v({a!r}) >= {k}")


def unit_residue(a: PAdic, field: FiniteField | None = None) -> FFElem:
    """Leading p-adic digit of ``a`` as an element of k_K."""
    if a.unit == 0:
        raise ZeroArgument("unit residue of zero")
    if field is None:
        field = GF(a.p)
    return field(a.unit % a.p)
