"""The coefficient field k_K = F_{p^m} in polynomial basis.

Elements are tuples of m coefficients (constant term first) reduced modulo a
fixed monic irreducible polynomial.  With m = 1 this is plain arithmetic mod p.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable, Sequence


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    # f monic
    r = [x % p for x in a]
    df = len(f) - 1
    for k in range(len(r) - 1, df - 1, -1):
        c = r[k]
        if c:
            for i in range(df + 1):
                r[k - df + i] = (r[k - df + i] - c * f[i]) % p
    return _trim(r[:df] if len(r) > df else r)


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    m = len(f) - 1
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(f, list(low) + [1], p):
                return False
    return True


class FiniteField:
    """F_{p^m} with a user-supplied monic irreducible modulus.

    ``modulus`` lists coefficients from the constant term upward and must be
    monic.  ``None`` selects the prime field F_p.
    """

    def __init__(self, p: int, modulus: Sequence[int] | None = None):
        if p < 2:
            raise ValueError("p must be a prime")
        if modulus is None:
            modulus = (0, 1)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        if not _is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.order = p**self.degree

    def __repr__(self):
        if self.degree == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.degree}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __call__(self, value) -> "FFElem":
        if isinstance(value, FFElem):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FFElem(self, (value % self.p,) + (0,) * (self.degree - 1))
        coeffs = [int(c) for c in value]
        if len(coeffs) > self.degree:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        coeffs = [c % self.p for c in coeffs] + [0] * (self.degree - len(coeffs))
        return FFElem(self, tuple(coeffs))

    @property
    def zero(self) -> "FFElem":
        return self(0)

    @property
    def one(self) -> "FFElem":
        return self(1)

    def elements(self) -> Iterable["FFElem"]:
        for c in itertools.product(range(self.p), repeat=self.degree):
            yield FFElem(self, tuple(c))

    def to_json(self):
        return {"p": self.p, "m": self.degree, "modulus": list(self.modulus)}


@functools.lru_cache(maxsize=None)
def GF(p: int, modulus: tuple[int, ...] | None = None) -> FiniteField:
    """Cached field constructor."""
    return FiniteField(p, modulus)


class FFElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _other(self, other) -> "FFElem":
        if isinstance(other, FFElem):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("mixing elements of different fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FFElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElem(self.field, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        F = self.field
        p = F.p
        if F.degree == 1:
            return FFElem(F, (self.coeffs[0] * other.coeffs[0] % p,))
        prod = [0] * (2 * F.degree - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        red = _poly_mod(prod, F.modulus, p)
        return FFElem(F, tuple(red) + (0,) * (F.degree - len(red)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        F = self.field
        if F.degree == 1:
            return FFElem(F, (pow(self.coeffs[0], k, F.p),))
        result, base = F.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "FFElem":
        if not self:
            raise ZeroDivisionError("inverse of zero in " + repr(self.field))
        F = self.field
        if F.degree == 1:
            return FFElem(F, (pow(self.coeffs[0], -1, F.p),))
        return self ** (F.order - 2)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FFElem):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if self.field.degree == 1:
            return str(self.coeffs[0])
        return "[" + ",".join(map(str, self.coeffs)) + "]"

    def to_json(self):
        if self.field.degree == 1:
            return str(self.coeffs[0])
        return list(self.coeffs)

    def multiplicative_order(self) -> int:
        if not self:
            raise ZeroDivisionError("zero has no multiplicative order")
        x, k = self, 1
        while x != 1:
            x = x * self
            k += 1
        return k


def first_irreducible(p: int, m: int) -> tuple[int, ...]:
    """The lexicographically smallest monic irreducible polynomial of degree m over F_p."""
    if m == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=m):
        f = tuple(reversed(low)) + (1,)
        if f[0] and _is_irreducible(f, p):
            return f
    raise ValueError(f"no irreducible polynomial of degree {m} over F_{p}")
