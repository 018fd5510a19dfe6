"""The symmetric group S_n as the Weyl group of GL_n.

A permutation w is stored by its one-line images ``(w(1), ..., w(n))``.  Its
permutation matrix has a 1 at row w(j), column j.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DimensionMismatch, IndexOutOfRange, InvalidPreset
from .padic import DEFAULT_PRECISION, PAdic, padic_from_rational


@dataclass(frozen=True, order=True)
class WeylElement:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def parse(cls, text: str) -> "WeylElement":
        """Parse one-line notation ``"2,3,1"``."""
        return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "WeylElement":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def transposition(cls, a: int, b: int, n: int) -> "WeylElement":
        imgs = list(range(1, n + 1))
        imgs[a - 1], imgs[b - 1] = b, a
        return cls(tuple(imgs))

    @classmethod
    def from_matrix(cls, rows) -> "WeylElement":
        """Read w off a 0/1 permutation matrix (rows of ints)."""
        n = len(rows)
        return cls(tuple(next(i + 1 for i in range(n) if rows[i][j] == 1) for j in range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __str__(self):
        return ",".join(map(str, self.images))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """Composition (self * other)(j) = self(other(j))."""
        if other.n != self.n:
            raise DimensionMismatch("permutations of different degree")
        return WeylElement(tuple(self.images[i - 1] for i in other.images))

    def inverse(self) -> "WeylElement":
        inv = [0] * self.n
        for j, i in enumerate(self.images, 1):
            inv[i - 1] = j
        return WeylElement(tuple(inv))

    def length(self) -> int:
        return length(self)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.n + 1))

    def matrix_rows(self) -> list[list[int]]:
        n = self.n
        return [[1 if self.images[j] == i + 1 else 0 for j in range(n)] for i in range(n)]

    def matrix(self, p: int, prec: int = DEFAULT_PRECISION):
        from .matrix import PMatrix

        one = padic_from_rational(1, 1, p, prec)
        zero = PAdic.zero(p, prec)
        n = self.n
        return PMatrix([[one if self.images[j] == i + 1 else zero for j in range(n)] for i in range(n)], p)


def all_elements(n: int) -> list[WeylElement]:
    return [WeylElement(perm) for perm in itertools.permutations(range(1, n + 1))]


def length(w: WeylElement) -> int:
    """Number of inversions, i.e. the Coxeter length."""
    a = w.images
    return sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] > a[j])


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Strong Bruhat order via the sorted-prefix (tableau) criterion."""
    if u.n != w.n:
        raise DimensionMismatch("permutations of different degree")
    a, b = u.images, w.images
    for k in range(1, u.n):
        for x, y in zip(sorted(a[:k]), sorted(b[:k])):
            if x > y:
                return False
    return True


@functools.lru_cache(maxsize=None)
def _chain_downset(w: WeylElement) -> frozenset:
    below = {w}
    lw = length(w)
    n = w.n
    for a in range(n):
        for b in range(a + 1, n):
            imgs = list(w.images)
            imgs[a], imgs[b] = imgs[b], imgs[a]
            v = WeylElement(tuple(imgs))
            if length(v) < lw:
                below |= _chain_downset(v)
    return frozenset(below)


def bruhat_leq_chain(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order as the closure of length-decreasing right multiplications by transpositions.

    Exponential in general; kept as an independent oracle for :func:`bruhat_leq`.
    """
    if u.n != w.n:
        raise DimensionMismatch("permutations of different degree")
    return u in _chain_downset(w)


def bruhat_lt(u: WeylElement, w: WeylElement) -> bool:
    return u != w and bruhat_leq(u, w)


# -- total orderings refining the Bruhat order --------------------------------

PAPER_N3 = ((1, 2, 3), (2, 1, 3), (1, 3, 2), (3, 1, 2), (2, 3, 1), (3, 2, 1))
PRESETS = ("default", "paper-n3")


class WeylOrdering:
    """An enumeration w_1, ..., w_{n!} of S_n refining the Bruhat order."""

    def __init__(self, elements: Sequence[WeylElement]):
        self.elements = tuple(elements)
        self._index = {w: i + 1 for i, w in enumerate(self.elements)}
        n = self.elements[0].n
        if len(self._index) != len(self.elements) or len(self.elements) != len(all_elements(n)):
            raise ValueError("ordering must enumerate S_n exactly once")

    @property
    def n(self) -> int:
        return self.elements[0].n

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)

    def __getitem__(self, m: int) -> WeylElement:
        """w_m, 1-based."""
        if not 1 <= m <= len(self.elements):
            raise IndexOutOfRange(m)
        return self.elements[m - 1]

    def index(self, w: WeylElement) -> int:
        return self._index[w]

    def violations(self) -> list[tuple[WeylElement, WeylElement]]:
        """Pairs (u, w) with u ≺ w but u listed after w."""
        out = []
        for i, u in enumerate(self.elements):
            for w in self.elements[:i]:
                if bruhat_lt(u, w):
                    out.append((u, w))
        return out

    def is_valid(self) -> bool:
        return (not self.violations() and self.elements[0].is_identity()
                and self.elements[-1] == WeylElement.longest(self.n))


def standard_ordering(n: int, preset: str = "default") -> WeylOrdering:
    if preset == "default":
        return WeylOrdering(sorted(all_elements(n), key=lambda w: (length(w), w.images)))
    if preset == "paper-n3":
        if n != 3:
            raise InvalidPreset("the paper-n3 preset exists only for n = 3")
        return WeylOrdering([WeylElement(x) for x in PAPER_N3])
    raise InvalidPreset(f"unknown preset {preset!r}; expected one of {PRESETS}")


# -- position sets -------------------------------------------------------------


@dataclass(frozen=True)
class PositionMask:
    """A set of strictly upper triangular positions (i, j), 1-based."""

    n: int
    positions: frozenset

    @classmethod
    def nw(cls, w: WeylElement) -> "PositionMask":
        winv = w.inverse()
        n = w.n
        return cls(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                                if winv(i) > winv(j)))

    @classmethod
    def nprime_w(cls, w: WeylElement) -> "PositionMask":
        winv = w.inverse()
        n = w.n
        return cls(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                                if winv(i) < winv(j)))

    @classmethod
    def n1(cls, n: int, j0: int) -> "PositionMask":
        return cls(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                                if i <= j0 <= j))

    @classmethod
    def upper(cls, n: int) -> "PositionMask":
        return cls(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))

    def __and__(self, other: "PositionMask") -> "PositionMask":
        return PositionMask(self.n, self.positions & other.positions)

    def __or__(self, other: "PositionMask") -> "PositionMask":
        return PositionMask(self.n, self.positions | other.positions)

    def __contains__(self, ij) -> bool:
        return tuple(ij) in self.positions

    def __iter__(self):
        return iter(sorted(self.positions))

    def __len__(self):
        return len(self.positions)


def theta_positions(w: WeylElement, j0: int) -> list[tuple[int, int]]:
    """N_w positions that conjugation by t' = diag(p,..,p,1,..,1) (j0 p's) scales by p."""
    return [(i, j) for (i, j) in PositionMask.nw(w) if i <= j0 < j]


def theta_representatives(w: WeylElement, j0: int, p: int, prec: int = DEFAULT_PRECISION):
    """Coset representatives of N_{w,j0} / t' N_{w,j0} t'^-1.

    One unipotent matrix per digit vector: entry p*a (0 <= a < p) at each
    position of :func:`theta_positions`, zero elsewhere.
    """
    from .matrix import PMatrix

    n = w.n
    if not 1 <= j0 < n:
        raise IndexOutOfRange(f"j0 must satisfy 1 <= j0 < {n}")
    pos = theta_positions(w, j0)
    reps = []
    for digits in itertools.product(range(p), repeat=len(pos)):
        rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for (i, j), a in zip(pos, digits):
            rows[i - 1][j - 1] = p * a
        reps.append(PMatrix.from_rationals(rows, p, prec))
    return reps


def tprime(n: int, j0: int, p: int, prec: int = DEFAULT_PRECISION):
    """diag(p, ..., p, 1, ..., 1) with j0 entries equal to p."""
    from .matrix import DiagElement

    return DiagElement.from_valuations(p, [1] * j0 + [0] * (n - j0), prec=prec)
