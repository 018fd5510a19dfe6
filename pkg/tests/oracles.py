"""Slow exact oracles over Q, independent of the column-elimination code.

Membership in U^(1)·w·B is read off the j x j minors of the first j columns:
for g = u·w·b with u ≡ 1 (mod p) the minor on the rows w({1..j}) is a unit
multiple of det(b_{≤j}) while every other minor is divisible by p times it.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from padic_bruhat.sampling import det, matmul


def vp(x: Fraction, p: int) -> float:
    if x == 0:
        return float("inf")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def minor(g, rows, cols) -> Fraction:
    return det([[g[i][j] for j in cols] for i in rows])


def perm_sign(seq) -> int:
    s = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                s = -s
    return s


def in_U1wB(g, w, p: int) -> bool:
    n = len(g)
    for j in range(1, n + 1):
        cols = range(j)
        target = tuple(sorted(w.images[k] - 1 for k in range(j)))
        vt = vp(minor(g, target, cols), p)
        if vt == float("inf"):
            return False
        for rows in itertools.combinations(range(n), j):
            if rows != target and vp(minor(g, rows, cols), p) <= vt:
                return False
    return True


def b_diagonal(g, w):
    """Diagonal of b in g = u·w·b, each entry up to a factor in 1 + pZ_p."""
    n = len(g)
    out = []
    prev_d, prev_s = Fraction(1), 1
    for j in range(1, n + 1):
        imgs = [w.images[k] - 1 for k in range(j)]
        d = minor(g, sorted(imgs), range(j))
        s = perm_sign(imgs)
        out.append(d / prev_d * s * prev_s)
        prev_d, prev_s = d, s
    return out


def chi_component(chi, i: int, x: Fraction):
    """χ_i(x) straight from the definition on Q^*."""
    p = chi.p
    v = int(vp(x, p))
    u = x / Fraction(p) ** v
    res = u.numerator * pow(u.denominator, -1, p) % p
    return chi.c[i] ** v * chi.field(res) ** chi.e[i]


def eval_fw(chi, w, g):
    if not in_U1wB(g, w, chi.p):
        return chi.field.zero
    out = chi.field.one
    for i, x in enumerate(b_diagonal(g, w)):
        out = out * chi_component(chi, i, x)
    return out.inverse()


def eval_term(chi, w, n, t, g):
    """(n t f_w)(g) = f_w(t^-1 n^-1 g) over Q."""
    from padic_bruhat.sampling import inverse

    return eval_fw(chi, w, matmul(inverse(t), matmul(inverse(n), g)))
