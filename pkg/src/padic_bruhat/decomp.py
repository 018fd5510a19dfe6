"""The factorization g = r·b with r in R_w and the U_w / Bruhat cell classifiers.

R_w is the set of matrices (a_ij) with

    a_ij = 1        if w^-1(i) = j,
    a_ij = 0        if w^-1(i) < j,
    a_ij ∈ Z_p      if w^-1(i) > j and w(j) > i,
    a_ij ∈ pZ_p     if w^-1(i) > j and w(j) < i,

and every invertible g has exactly one expression g = r·b with r in some R_w
and b upper triangular.  U_w = R_w·B.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InsufficientPrecision, SingularToPrecision
from .matrix import PMatrix, rank
from .padic import DEFAULT_PRECISION, PAdic, valuation_at_least
from .sampling import DEFAULT_DIGITS, DEFAULT_WINDOW
from .sampling import sample_cell as _sample_cell_q
from .weyl import WeylElement


@dataclass(frozen=True)
class RBDecomposition:
    w: WeylElement
    r: PMatrix
    b: PMatrix

    def to_json(self) -> dict:
        prec = max(x.prec for row in self.r.rows for x in row)
        return {"w": str(self.w), "r": self.r.to_json(), "b": self.b.to_json(), "precision": prec}


def rw_pattern(w: WeylElement) -> list[list[str]]:
    """Entry classes of R_w: ``"1"``, ``"0"``, ``"o"`` (integral) or ``"po"`` (in pZ_p)."""
    n = w.n
    winv = w.inverse()
    pat = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if winv(i) == j:
                row.append("1")
            elif winv(i) < j:
                row.append("0")
            elif w(j) > i:
                row.append("o")
            else:
                row.append("po")
        pat.append(row)
    return pat


def matches_Rw(r: PMatrix, w: WeylElement) -> bool:
    for row, classes in zip(r.rows, rw_pattern(w)):
        for x, cls in zip(row, classes):
            if cls == "1":
                if not (x - 1).is_zero():
                    return False
            elif cls == "0":
                if not x.is_zero():
                    return False
            elif not valuation_at_least(x, 0 if cls == "o" else 1):
                return False
    return True


def rb_decompose(g: PMatrix) -> RBDecomposition:
    """Factor g = r·b with r in R_w, b upper triangular.

    Columns are processed left to right.  Column j first has the earlier
    r-columns subtracted so that it vanishes on the rows already used as
    pivots; the multipliers become b_{j'j}.  The pivot is the entry of minimal
    valuation among the remaining rows, taking the largest row index on ties,
    and the column is divided by it (b_jj).  Rows below the pivot then have
    positive valuation and rows above it are integral, which is the R_w shape.
    """
    n, p = g.n, g.p
    N = max(x.prec for row in g.rows for x in row) or DEFAULT_PRECISION
    exact_zero = PAdic.zero(p, N)
    cols = [list(c) for c in zip(*g.rows)]
    r_cols: list[list[PAdic]] = []
    b_cols: list[list[PAdic]] = []
    piv_rows: list[int] = []
    free = list(range(n))
    for j in range(n):
        col = cols[j]
        bcol = [exact_zero] * n
        for jp in range(j):
            c = col[piv_rows[jp]]
            bcol[jp] = c
            rc = r_cols[jp]
            col = [x - c * y for x, y in zip(col, rc)]
        best_v = None
        i0 = -1
        for i in free:
            x = col[i]
            if x.unit and (best_v is None or x.val <= best_v):
                best_v = x.val
                i0 = i
        if i0 < 0:
            raise SingularToPrecision(f"column {j + 1} vanishes to precision after elimination")
        for i in free:
            x = col[i]
            if not x.unit:
                need = best_v + 1 if i > i0 else best_v
                if x.val < need:
                    raise InsufficientPrecision(
                        f"pivot of column {j + 1} undecidable: entry {i + 1} is {x!r}")
        piv = col[i0]
        inv = piv.inverse()
        rcol = [x * inv for x in col]
        for i in piv_rows:
            rcol[i] = exact_zero
        r_cols.append(rcol)
        bcol[j] = piv
        b_cols.append(bcol)
        piv_rows.append(i0)
        free.remove(i0)
    w = WeylElement(tuple(i + 1 for i in piv_rows))
    r = PMatrix([list(row) for row in zip(*r_cols)], p)
    b = PMatrix([list(row) for row in zip(*b_cols)], p)
    return RBDecomposition(w, r, b)


def classify_Uw(g: PMatrix) -> WeylElement:
    """The w with g in U_w = R_w·B."""
    return rb_decompose(g).w


def r_in_Ulw(d: RBDecomposition, level: int) -> bool:
    """Is r ≡ w modulo p^level, i.e. r in U^(level)·w?"""
    pivots = {(d.w(j) - 1, j - 1) for j in range(1, d.w.n + 1)}
    for i, row in enumerate(d.r.rows):
        for j, x in enumerate(row):
            if (i, j) not in pivots and not valuation_at_least(x, level):
                return False
    return True


def in_UlwB(g: PMatrix, w: WeylElement, level: int) -> bool:
    """Is g in U^(level)·w·B?"""
    if level < 1:
        raise ValueError("level must be >= 1")
    d = rb_decompose(g)
    return d.w == w and r_in_Ulw(d, level)


def lower_left_ranks(g: PMatrix) -> list[list[int]]:
    """ranks[i][j] = rank of rows i+1..n, columns 1..j+1 (0-based indices)."""
    n = g.n
    return [[rank([row[: j + 1] for row in g.rows[i:]]) for j in range(n)] for i in range(n)]


def bruhat_cell(g: PMatrix) -> WeylElement:
    """The w with g in BwB, from the rank jumps of the lower-left submatrices.

    Left multiplication by B preserves the span of the bottom rows and right
    multiplication preserves the span of the leading columns, so these ranks
    are BwB-invariants; for w itself rank(rows >= i, cols <= j) counts the
    k <= j with w(k) >= i.
    """
    n = g.n
    rk = lower_left_ranks(g)
    imgs = []
    for j in range(n):
        jump = [rk[i][j] - (rk[i][j - 1] if j else 0) for i in range(n)]
        below = [i for i in range(n) if jump[i] == 1]
        if not below:
            raise InsufficientPrecision(f"rank profile of column {j + 1} is degenerate")
        imgs.append(max(below) + 1)
    try:
        w = WeylElement(tuple(imgs))
    except ValueError:
        raise InsufficientPrecision("rank profile is not that of a permutation") from None
    expected = [[sum(1 for k in range(j + 1) if w.images[k] >= i + 1) for j in range(n)] for i in range(n)]
    if expected != rk:
        raise InsufficientPrecision("rank profile is not that of a permutation")
    return w


def sample_cell(w: WeylElement, p: int, rng: random.Random, V: int = DEFAULT_WINDOW,
                digits: int = DEFAULT_DIGITS, prec: int = DEFAULT_PRECISION) -> PMatrix:
    """A random element n_w·w·b of BwB."""
    return PMatrix.from_rationals(_sample_cell_q(rng, w, p, V, digits), p, prec)
