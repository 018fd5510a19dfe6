"""Seeded samplers producing exact rational matrices.

Samples are built over Q (``fractions.Fraction``) so that every sampled input
can be replayed exactly; convert with :meth:`PMatrix.from_rationals`.
Valuation offsets are drawn uniformly from ``[-V, V]`` and units carry a
bounded number of base-p digits.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .weyl import WeylElement

Matrix = list[list[Fraction]]

DEFAULT_WINDOW = 2
DEFAULT_DIGITS = 3


def trial_rng(seed: int, suite: str, index: int) -> random.Random:
    """Independent stream for one trial; depends only on (seed, suite, index)."""
    return random.Random(f"{seed}/{suite}/{index}")


def random_unit(rng: random.Random, p: int, digits: int = DEFAULT_DIGITS) -> int:
    while True:
        u = rng.randrange(1, p**digits)
        if u % p:
            return u


def power(p: int, v: int) -> Fraction:
    return Fraction(p) ** v


def random_rational(rng: random.Random, p: int, V: int = DEFAULT_WINDOW, digits: int = DEFAULT_DIGITS,
                    zero_prob: float = 0.0, vmin: int | None = None) -> Fraction:
    if zero_prob and rng.random() < zero_prob:
        return Fraction(0)
    lo = -V if vmin is None else vmin
    v = rng.randint(lo, max(lo, V))
    sign = -1 if rng.random() < 0.5 else 1
    return sign * random_unit(rng, p, digits) * power(p, v)


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]


def det(a: Matrix) -> Fraction:
    m = [list(r) for r in a]
    n = len(m)
    d = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            d = -d
        d *= m[k][k]
        for r in range(k + 1, n):
            f = m[r][k] / m[k][k]
            if f:
                m[r] = [m[r][c] - f * m[k][c] for c in range(n)]
    return d


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    m = [list(a[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next(i for i in range(k, n) if m[i][k] != 0)
        m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for r in range(n):
            if r != k and m[r][k]:
                f = m[r][k]
                m[r] = [m[r][c] - f * m[k][c] for c in range(2 * n)]
    return [row[n:] for row in m]


def permutation(w: WeylElement) -> Matrix:
    return [[Fraction(x) for x in row] for row in w.matrix_rows()]


def diagonal(entries: Sequence[Fraction]) -> Matrix:
    n = len(entries)
    return [[Fraction(entries[i]) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def sample_gl(rng: random.Random, n: int, p: int, V: int = DEFAULT_WINDOW,
              digits: int = DEFAULT_DIGITS, zero_prob: float = 0.1) -> Matrix:
    while True:
        g = [[random_rational(rng, p, V, digits, zero_prob) for _ in range(n)] for _ in range(n)]
        if det(g) != 0:
            return g


def sample_upper(rng: random.Random, n: int, p: int, V: int = DEFAULT_WINDOW,
                 digits: int = DEFAULT_DIGITS) -> Matrix:
    """Random invertible upper triangular matrix."""
    return [[random_rational(rng, p, V, digits) if i == j else
             (random_rational(rng, p, V, digits, zero_prob=0.2) if j > i else Fraction(0))
             for j in range(n)] for i in range(n)]


def sample_nw(rng: random.Random, w: WeylElement, p: int, V: int = DEFAULT_WINDOW,
              digits: int = DEFAULT_DIGITS) -> Matrix:
    """Unipotent matrix supported on the N_w positions."""
    n = w.n
    winv = w.inverse()
    m = identity(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if winv(i) > winv(j):
                m[i - 1][j - 1] = random_rational(rng, p, V, digits, zero_prob=0.15)
    return m


def sample_cell(rng: random.Random, w: WeylElement, p: int, V: int = DEFAULT_WINDOW,
                digits: int = DEFAULT_DIGITS) -> Matrix:
    """n_w · w · b, an element of the Bruhat cell BwB."""
    return matmul(matmul(sample_nw(rng, w, p, V, digits), permutation(w)), sample_upper(rng, w.n, p, V, digits))


def sample_n0(rng: random.Random, n: int, p: int, digits: int = DEFAULT_DIGITS) -> Matrix:
    m = identity(n)
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = Fraction(rng.randrange(-(p**digits) + 1, p**digits))
    return m


def sample_nprime(rng: random.Random, w: WeylElement, p: int, digits: int = DEFAULT_DIGITS,
                  unit_prob: float = 0.5) -> Matrix:
    """Integral unipotent matrix supported on the N'_w positions."""
    n = w.n
    winv = w.inverse()
    m = identity(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if winv(i) < winv(j):
                if rng.random() < unit_prob:
                    m[i - 1][j - 1] = Fraction(random_unit(rng, p, digits))
                else:
                    m[i - 1][j - 1] = Fraction(rng.randrange(p**digits))
    return m


def sample_tplus_valuations(rng: random.Random, n: int, max_gap: int = 2, base: int = 0) -> list[int]:
    """Valuations weakly decreasing down the diagonal."""
    vals = [base]
    for _ in range(n - 1):
        vals.insert(0, vals[0] + rng.randint(0, max_gap))
    return vals


def sample_tplus(rng: random.Random, n: int, p: int, max_gap: int = 2, digits: int = 1,
                 V: int = DEFAULT_WINDOW) -> Matrix:
    base = rng.randint(-V, V)
    vals = sample_tplus_valuations(rng, n, max_gap, base)
    return diagonal([random_unit(rng, p, digits) * power(p, v) for v in vals])


def sample_u(rng: random.Random, n: int, p: int, level: int = 1, digits: int = DEFAULT_DIGITS) -> Matrix:
    """Element of the congruence subgroup U^(level)."""
    m = identity(n)
    for i in range(n):
        for j in range(n):
            m[i][j] += p**level * rng.randrange(p**digits)
    return m


def sample_rw(rng: random.Random, w: WeylElement, p: int, digits: int = DEFAULT_DIGITS,
              kmax: int = 3, zero_prob: float = 0.2) -> Matrix:
    """A matrix of the R_w pattern with entries p^k·u, k spread over 0..kmax."""
    from .decomp import rw_pattern

    pat = rw_pattern(w)
    n = w.n
    m = identity(n)
    for i in range(n):
        for j in range(n):
            cls = pat[i][j]
            if cls == "1":
                m[i][j] = Fraction(1)
            elif cls == "0":
                m[i][j] = Fraction(0)
            elif rng.random() < zero_prob:
                m[i][j] = Fraction(0)
            else:
                lo = 0 if cls == "o" else 1
                k = rng.randint(lo, kmax + lo)
                m[i][j] = Fraction(rng.choice((-1, 1)) * random_unit(rng, p, digits) * p**k)
    return m


def to_strings(m: Matrix) -> list[list[str]]:
    return [[str(x) for x in row] for row in m]
