"""Square matrices over Q_p and the subgroup predicates of GL_n(Q_p).

Row and column indices in the public predicates are 1-based to match the usual
matrix notation; ``PMatrix.rows`` itself is a tuple of tuples (0-based).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    InsufficientPrecision,
    SingularToPrecision,
    ZeroArgument,
)
from .padic import DEFAULT_PRECISION, PAdic, padic_from_rational, valuation_at_least


def parse_entry(x, p: int, prec: int) -> PAdic:
    """Accept an int, Fraction, rational string ``"num/den"`` or digit object."""
    if isinstance(x, PAdic):
        return x
    if isinstance(x, dict):
        return PAdic.from_digits(p, int(x["val"]), x["digits"])
    if isinstance(x, str):
        x = Fraction(x.strip())
    x = Fraction(x)
    return padic_from_rational(x.numerator, x.denominator, p, prec)


class PMatrix:
    __slots__ = ("p", "rows")

    def __init__(self, rows: Sequence[Sequence[PAdic]], p: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("matrix must be square and non-empty")
        if p is None:
            p = rows[0][0].p
        if any(x.p != p for r in rows for x in r):
            raise ValueError("entries must share one prime")
        self.p = p
        self.rows = rows

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rationals(cls, rows, p: int, prec: int = DEFAULT_PRECISION) -> "PMatrix":
        return cls([[parse_entry(x, p, prec) for x in r] for r in rows], p)

    @classmethod
    def identity(cls, n: int, p: int, prec: int = DEFAULT_PRECISION) -> "PMatrix":
        one = padic_from_rational(1, 1, p, prec)
        zero = PAdic.zero(p, prec)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], p)

    @classmethod
    def diagonal(cls, entries: Sequence[PAdic], prec: int | None = None) -> "PMatrix":
        p = entries[0].p
        if prec is None:
            prec = max(e.prec for e in entries) or DEFAULT_PRECISION
        zero = PAdic.zero(p, prec)
        n = len(entries)
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)], p)

    @classmethod
    def from_json(cls, text_or_obj, p: int, prec: int = DEFAULT_PRECISION) -> "PMatrix":
        obj = json.loads(text_or_obj) if isinstance(text_or_obj, str) else text_or_obj
        return cls.from_rationals(obj, p, prec)

    # -- access -------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> PAdic:
        i, j = ij
        return self.rows[i][j]

    def entry(self, i: int, j: int) -> PAdic:
        """1-based entry access."""
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> list[PAdic]:
        return [r[j] for r in self.rows]

    def to_json(self) -> list:
        return [[x.to_json() for x in r] for r in self.rows]

    def to_fractions(self) -> list[list[Fraction]]:
        return [[x.to_fraction() for x in r] for r in self.rows]

    def __repr__(self):
        body = ",\n ".join("[" + ", ".join(repr(x) for x in r) + "]" for r in self.rows)
        return f"PMatrix([{body}])"

    def __eq__(self, other):
        if not isinstance(other, PMatrix) or other.n != self.n:
            return False
        return all(a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    __hash__ = None

    # -- arithmetic ---------------------------------------------------------

    def __matmul__(self, other: "PMatrix") -> "PMatrix":
        return mat_mul(self, other)

    def __neg__(self):
        return PMatrix([[-x for x in r] for r in self.rows], self.p)

    def __sub__(self, other: "PMatrix") -> "PMatrix":
        return PMatrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)], self.p)

    def __add__(self, other: "PMatrix") -> "PMatrix":
        return PMatrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)], self.p)

    def inverse(self) -> "PMatrix":
        return mat_inv(self)

    def scale_rows(self, factors: Sequence[PAdic]) -> "PMatrix":
        """diag(factors) @ self."""
        return PMatrix([[f * x for x in r] for f, r in zip(factors, self.rows)], self.p)

    def shift_rows(self, shifts: Sequence[int]) -> "PMatrix":
        """diag(p**shifts) @ self, computed by valuation shifts only."""
        return PMatrix([[x.shift(k) for x in r] for k, r in zip(shifts, self.rows)], self.p)

    def det(self) -> PAdic:
        return _determinant(self)

    def min_absprec(self) -> int:
        return min(x.absprec for r in self.rows for x in r)


def mat_mul(a: PMatrix, b: PMatrix) -> PMatrix:
    if a.n != b.n:
        raise DimensionMismatch(f"{a.n}x{a.n} @ {b.n}x{b.n}")
    cols = list(zip(*b.rows))
    out = []
    for r in a.rows:
        row = []
        for c in cols:
            acc = r[0] * c[0]
            for k in range(1, len(r)):
                acc = acc + r[k] * c[k]
            row.append(acc)
        out.append(row)
    return PMatrix(out, a.p)


def _pivot(entries: Iterable[tuple[int, PAdic]]):
    best = None
    for i, x in entries:
        if x.unit and (best is None or x.val < best[1].val):
            best = (i, x)
    return best


def _determinant(a: PMatrix) -> PAdic:
    """Determinant by elimination with minimal-valuation pivots."""
    m = [list(r) for r in a.rows]
    n = a.n
    det = padic_from_rational(1, 1, a.p, max(x.prec for r in m for x in r) or 1)
    for k in range(n):
        piv = _pivot((i, m[i][k]) for i in range(k, n))
        if piv is None:
            worst = min((m[i][k] for i in range(k, n)), key=lambda x: x.absprec)
            return det * worst
        i, x = piv
        if i != k:
            m[i], m[k] = m[k], m[i]
            det = -det
        det = det * x
        xinv = x.inverse()
        for r in range(k + 1, n):
            f = m[r][k] * xinv
            m[r] = [m[r][c] - f * m[k][c] if c > k else m[r][c] for c in range(n)]
    return det


def rank(rows: Sequence[Sequence[PAdic]]) -> int:
    """Rank of a (possibly rectangular) matrix over Q_p.

    Entries that are zero to precision are treated as zero, so this is the
    rank of the displayed representative.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rk = 0
    for c in range(nc):
        piv = _pivot((i, m[i][c]) for i in range(rk, nr))
        if piv is None:
            continue
        i, x = piv
        m[i], m[rk] = m[rk], m[i]
        xinv = x.inverse()
        for r in range(rk + 1, nr):
            f = m[r][c] * xinv
            m[r] = [m[r][k] - f * m[rk][k] for k in range(nc)]
        rk += 1
        if rk == nr:
            break
    return rk


def mat_inv(a: PMatrix) -> PMatrix:
    """Gauss-Jordan inverse, pivoting on the entry of minimal valuation."""
    n, p = a.n, a.p
    prec = max(x.prec for r in a.rows for x in r) or DEFAULT_PRECISION
    ident = PMatrix.identity(n, p, prec).rows
    m = [list(a.rows[i]) + list(ident[i]) for i in range(n)]
    for k in range(n):
        piv = _pivot((i, m[i][k]) for i in range(k, n))
        if piv is None:
            raise SingularToPrecision(f"column {k + 1} vanishes to precision")
        i, x = piv
        m[i], m[k] = m[k], m[i]
        xinv = x.inverse()
        m[k] = [y * xinv for y in m[k]]
        for r in range(n):
            if r != k:
                f = m[r][k]
                m[r] = [m[r][c] - f * m[k][c] for c in range(2 * n)]
    return PMatrix([row[n:] for row in m], p)


def elementary_diag(k: int, alpha: PAdic, n: int, prec: int | None = None) -> PMatrix:
    """diag(1, ..., alpha, ..., 1) with alpha in row k (1-based)."""
    if alpha.is_zero():
        raise ZeroArgument("elementary_diag needs a non-zero entry")
    if not 1 <= k <= n:
        raise IndexError(k)
    prec = prec or max(alpha.prec, 1)
    one = padic_from_rational(1, 1, alpha.p, prec)
    return PMatrix.diagonal([alpha if i == k - 1 else one for i in range(n)], prec)


@dataclass(frozen=True)
class DiagElement:
    """A diagonal matrix diag(x_1, ..., x_n) kept as its entries."""

    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if any(x.is_zero() for x in self.entries):
            raise ZeroArgument("diagonal entries must be non-zero")

    @classmethod
    def from_valuations(cls, p: int, vals: Sequence[int], units: Sequence[int] | None = None,
                        prec: int = DEFAULT_PRECISION) -> "DiagElement":
        units = units or [1] * len(vals)
        return cls(tuple(padic_from_rational(u * p**v if v >= 0 else u, 1 if v >= 0 else p**-v, p, prec)
                         for v, u in zip(vals, units)))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def p(self) -> int:
        return self.entries[0].p

    @property
    def valuations(self) -> tuple[int, ...]:
        return tuple(x.val for x in self.entries)

    @property
    def units(self) -> tuple[int, ...]:
        return tuple(x.unit for x in self.entries)

    def in_Tplus(self) -> bool:
        # t N_0 t^-1 ⊂ N_0  <=>  valuations weakly decrease down the diagonal
        v = self.valuations
        return all(v[i] >= v[i + 1] for i in range(len(v) - 1))

    def is_unit_scaling(self) -> bool:
        """True when every entry is p**k exactly (so t acts by valuation shifts)."""
        return all(x.unit == 1 for x in self.entries)

    def matrix(self) -> PMatrix:
        return PMatrix.diagonal(list(self.entries))

    def inverse(self) -> "DiagElement":
        return DiagElement(tuple(x.inverse() for x in self.entries))

    def __mul__(self, other: "DiagElement") -> "DiagElement":
        return DiagElement(tuple(a * b for a, b in zip(self.entries, other.entries)))

    def conjugate(self, m: PMatrix) -> PMatrix:
        """t m t^-1."""
        e = self.entries
        inv = [x.inverse() for x in e]
        return PMatrix([[e[i] * x * inv[j] for j, x in enumerate(r)] for i, r in enumerate(m.rows)], m.p)


# -- membership predicates ---------------------------------------------------

SUBGROUP_TAGS = ("B", "N", "N0", "N-", "T", "T+", "G0", "U", "Nw", "N'w")


def _is_zero(x: PAdic) -> bool:
    return x.unit == 0


def _is_one(x: PAdic) -> bool:
    return (x - 1).unit == 0


def _strict_upper(n):
    return ((i, j) for i in range(n) for j in range(i + 1, n))


def _strict_lower(n):
    return ((i, j) for i in range(n) for j in range(i))


def _upper_triangular(g: PMatrix) -> bool:
    return all(_is_zero(g.rows[i][j]) for i, j in _strict_lower(g.n))


def _diag_invertible(g: PMatrix) -> bool:
    return all(not _is_zero(g.rows[i][i]) for i in range(g.n))


def _unipotent_upper(g: PMatrix) -> bool:
    return _upper_triangular(g) and all(_is_one(g.rows[i][i]) for i in range(g.n))


def _integral(g: PMatrix) -> bool:
    return all(valuation_at_least(x, 0) for r in g.rows for x in r)


def membership(g: PMatrix, tag: str, w=None, level: int | None = None) -> bool:
    """Decide ``g ∈ S`` for the subgroup (or monoid, or pattern set) named by ``tag``.

    Tags: ``B``, ``N``, ``N0``, ``N-``, ``T``, ``T+``, ``G0``, ``U`` (needs
    ``level``), ``Nw`` and ``N'w`` (need ``w``).  Entries required to vanish
    are tested to the known precision; valuation bounds that the digits
    cannot settle raise :class:`InsufficientPrecision`.
    """
    n = g.n
    rows = g.rows
    if tag == "B":
        return _upper_triangular(g) and _diag_invertible(g)
    if tag == "N":
        return _unipotent_upper(g)
    if tag == "N0":
        return _unipotent_upper(g) and all(valuation_at_least(rows[i][j], 0) for i, j in _strict_upper(n))
    if tag == "N-":
        return (all(_is_zero(rows[i][j]) for i, j in _strict_upper(n))
                and all(_is_one(rows[i][i]) for i in range(n)))
    if tag in ("T", "T+"):
        if not all(_is_zero(rows[i][j]) for i in range(n) for j in range(n) if i != j):
            return False
        if not _diag_invertible(g):
            return False
        if tag == "T":
            return True
        return DiagElement(tuple(rows[i][i] for i in range(n))).in_Tplus()
    if tag == "G0":
        if not _integral(g):
            return False
        d = g.det()
        if d.is_zero():
            raise InsufficientPrecision("determinant vanishes to precision")
        return d.val == 0
    if tag == "U":
        if level is None or level < 1:
            raise ValueError("U needs level >= 1")
        for i in range(n):
            for j in range(n):
                x = rows[i][j] - 1 if i == j else rows[i][j]
                if not valuation_at_least(x, level):
                    return False
        return True
    if tag in ("Nw", "N'w"):
        if w is None:
            raise ValueError(f"{tag} needs a Weyl element")
        if not _unipotent_upper(g):
            return False
        winv = w.inverse().images
        for i, j in _strict_upper(n):
            inv_higher = winv[i] > winv[j]
            allowed = inv_higher if tag == "Nw" else not inv_higher
            if not allowed and not _is_zero(rows[i][j]):
                return False
        return True
    raise ValueError(f"unknown subgroup tag {tag!r}")


def unipotent_inverse(n_mat: PMatrix) -> PMatrix:
    """Inverse of a unipotent upper triangular matrix by back substitution."""
    n = n_mat.n
    rows = n_mat.rows
    p = n_mat.p
    prec = max(x.prec for r in rows for x in r) or DEFAULT_PRECISION
    one = padic_from_rational(1, 1, p, prec)
    zero = PAdic.zero(p, prec)
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for j in range(n):
        for i in range(j - 1, -1, -1):
            acc = zero
            for k in range(i + 1, j + 1):
                acc = acc + rows[i][k] * inv[k][j]
            inv[i][j] = -acc
    return PMatrix(inv, p)
