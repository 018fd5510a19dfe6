"""Characters of the torus, the basis functions f_w and finite B_+-combinations of them.

A function in the principal series transforms as f(g·b) = χ^-1(b)·f(g).  The
basis function f_w is supported on U^(1)·w·B and equals χ^-1(b) at u·w·b.
Elements of the B_+-span are stored as formal sums of terms λ·n·t·f_w and
evaluated pointwise through (n t f_w)(g) = f_w(t^-1 n^-1 g).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .decomp import in_UlwB, r_in_Ulw, rb_decompose
from .errors import (
    CharacterNotAdmissible,
    InsufficientPrecision,
    NotInBPlus,
    NotUpperTriangular,
    PrecisionError,
)
from .kfield import GF, FFElem, FiniteField, first_irreducible
from .matrix import DiagElement, PMatrix, membership, unipotent_inverse
from .padic import DEFAULT_PRECISION, PAdic
from .sampling import to_strings
from .weyl import WeylElement, standard_ordering, theta_representatives, tprime


# -- characters ----------------------------------------------------------------


@dataclass(frozen=True)
class Character:
    """χ = χ_1 ⊗ ... ⊗ χ_n with χ_i(p) = c_i and χ_i(u) = (u mod p)^{e_i} on units."""

    field: FiniteField
    c: tuple
    e: tuple

    def __post_init__(self):
        c = tuple(self.field(x) for x in self.c)
        if any(not x for x in c):
            raise ValueError("χ_i(p) must be non-zero")
        if len(c) != len(self.e):
            raise ValueError("c and e must have the same length")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "e", tuple(int(x) % (self.field.p - 1) for x in self.e))

    @classmethod
    def make(cls, p: int, c: Sequence, e: Sequence[int], m: int = 1,
             modulus: Sequence[int] | None = None) -> "Character":
        if modulus is None:
            modulus = first_irreducible(p, m)
        return cls(GF(p, tuple(modulus)), tuple(c), tuple(e))

    @classmethod
    def trivial(cls, p: int, n: int) -> "Character":
        return cls.make(p, [1] * n, [0] * n)

    @classmethod
    def from_json(cls, obj) -> "Character":
        if isinstance(obj, str):
            obj = json.loads(obj)
        p = int(obj["p"])
        m = int(obj.get("m", 1))
        cs = []
        for item in obj["chi"]:
            c = item["c"]
            cs.append(int(c) if isinstance(c, (str, int)) else [int(x) for x in c])
        return cls.make(p, cs, [int(item["e"]) for item in obj["chi"]], m, obj.get("modulus"))

    def to_json(self) -> dict:
        out = {"p": self.field.p, "m": self.field.degree,
               "chi": [{"c": c.to_json(), "e": e} for c, e in zip(self.c, self.e)]}
        if self.field.degree > 1:
            out["modulus"] = list(self.field.modulus)
        return out

    @property
    def n(self) -> int:
        return len(self.c)

    @property
    def p(self) -> int:
        return self.field.p

    def component(self, i: int, x: PAdic) -> FFElem:
        """χ_i(x) for i in 1..n."""
        if x.is_zero():
            raise InsufficientPrecision(f"χ of {x!r}")
        res = self.field(x.unit % x.p)
        return self.c[i - 1] ** x.val * res ** self.e[i - 1]

    def on_diagonal(self, entries: Iterable[PAdic]) -> FFElem:
        out = self.field.one
        for i, x in enumerate(entries, 1):
            out = out * self.component(i, x)
        return out

    def __call__(self, b) -> FFElem:
        if isinstance(b, DiagElement):
            return self.on_diagonal(b.entries)
        return char_eval(self, b)

    def inverse(self) -> "Character":
        return Character(self.field, tuple(x.inverse() for x in self.c), tuple(-x for x in self.e))


def char_eval(chi: Character, b: PMatrix) -> FFElem:
    """χ(b) = Π χ_i(b_ii) for b upper triangular."""
    n = b.n
    rows = b.rows
    if any(not rows[i][j].is_zero() for i in range(n) for j in range(i)):
        raise NotUpperTriangular("χ is defined on B only")
    return chi.on_diagonal(rows[i][i] for i in range(n))


def is_irreducible_char(chi: Character) -> bool:
    return all((chi.c[i], chi.e[i]) != (chi.c[i + 1], chi.e[i + 1]) for i in range(chi.n - 1))


def generic_character(p: int, n: int) -> Character:
    """A fixed irreducible character: distinct tame exponents when p > 2, distinct χ_i(p) otherwise."""
    if p > 2:
        return Character.make(p, [1] * n, [i % 2 for i in range(n)])
    return Character.make(p, [[1, i % 2] for i in range(n)], [0] * n, m=2)


def weyl_conjugate(w: WeylElement, t: DiagElement) -> DiagElement:
    """w^-1 t w, whose i-th entry is t_{w(i)}."""
    return DiagElement(tuple(t.entries[w(i) - 1] for i in range(1, w.n + 1)))


# -- f_w and its translates ----------------------------------------------------


def eval_fw(chi: Character, w: WeylElement, g: PMatrix) -> FFElem:
    d = rb_decompose(g)
    if d.w == w and r_in_Ulw(d, 1):
        return char_eval(chi, d.b).inverse()
    return chi.field.zero


@dataclass(frozen=True)
class Term:
    lam: FFElem
    n: PMatrix
    t: DiagElement
    w: WeylElement
    shift: PMatrix = field(compare=False, repr=False)  # t^-1 n^-1

    @classmethod
    def make(cls, lam: FFElem, n: PMatrix, t: DiagElement, w: WeylElement, check: bool = True) -> "Term":
        if check and not (membership(n, "N0") and t.in_Tplus()):
            raise NotInBPlus("terms need n in N_0 and t in T_+")
        ninv = unipotent_inverse(n)
        tinv = t.inverse().entries
        shift = PMatrix([[tinv[i] * x for x in row] for i, row in enumerate(ninv.rows)], n.p)
        return cls(lam, n, t, w, shift)


class PSElement:
    """A formal sum Σ λ_i n_i t_i f_{w_i} with n_i in N_0 and t_i in T_+."""

    def __init__(self, chi: Character, terms: Sequence[Term] = ()):
        self.chi = chi
        self.terms = tuple(terms)

    @classmethod
    def basis(cls, chi: Character, w: WeylElement, prec: int = DEFAULT_PRECISION) -> "PSElement":
        p, n = chi.p, w.n
        return cls(chi, [Term.make(chi.field.one, PMatrix.identity(n, p, prec),
                                   DiagElement.from_valuations(p, [0] * n, prec=prec), w)])

    @classmethod
    def single(cls, chi: Character, w: WeylElement, n: PMatrix | None = None, t: DiagElement | None = None,
               lam=1, prec: int = DEFAULT_PRECISION) -> "PSElement":
        p, dim = chi.p, w.n
        n = n if n is not None else PMatrix.identity(dim, p, prec)
        t = t if t is not None else DiagElement.from_valuations(p, [0] * dim, prec=prec)
        return cls(chi, [Term.make(chi.field(lam), n, t, w)])

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "PSElement") -> "PSElement":
        if other.chi != self.chi:
            raise ValueError("elements of different principal series")
        return PSElement(self.chi, self.terms + other.terms)

    def scale(self, lam) -> "PSElement":
        lam = self.chi.field(lam)
        return PSElement(self.chi, [Term(lam * s.lam, s.n, s.t, s.w, s.shift) for s in self.terms])

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other: "PSElement") -> "PSElement":
        return self + (-other)

    def __call__(self, g: PMatrix) -> FFElem:
        return eval_element(self, g)

    def weyl_elements(self) -> set[WeylElement]:
        return {s.w for s in self.terms}


def eval_element(v: PSElement, g: PMatrix) -> FFElem:
    total = v.chi.field.zero
    for s in v.terms:
        if s.lam:
            total = total + s.lam * eval_fw(v.chi, s.w, s.shift @ g)
    return total


def act_bplus(n: PMatrix, t: DiagElement, v: PSElement) -> PSElement:
    """(n t)·v, using (n t)(n' t') = (n · t n' t^-1)(t t')."""
    if not (membership(n, "N0") and t.in_Tplus()):
        raise NotInBPlus("n t must lie in B_+ = N_0 T_+")
    terms = [Term.make(s.lam, n @ t.conjugate(s.n), t * s.t, s.w) for s in v.terms]
    return PSElement(v.chi, terms)


# -- reports -------------------------------------------------------------------


@dataclass
class Report:
    suite: str
    trials: int = 0
    failures: list = field(default_factory=list)
    precision_aborts: int = 0
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, inp, expected, got):
        self.failures.append({"input": inp, "expected": _jsonable(expected), "got": _jsonable(got)})

    def merge(self, other: "Report") -> "Report":
        self.trials += other.trials
        self.failures.extend(other.failures)
        self.precision_aborts += other.precision_aborts
        return self

    def to_json(self) -> dict:
        out = {"suite": self.suite, "trials": self.trials, "failures": self.failures,
               "precision_aborts": self.precision_aborts}
        if self.details:
            out["details"] = self.details
        return out


def _jsonable(x):
    if isinstance(x, FFElem):
        return x.to_json()
    if isinstance(x, WeylElement):
        return str(x)
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {k: _jsonable(y) for k, y in x.items()}
    return str(x)


Sampler = Callable[[random.Random], list]


def lower_cells_sampler(w: WeylElement, p: int, V: int = 2, digits: int = 3) -> Sampler:
    """Points of ∪_{w' ⪯ w} U_{w'}: a cell element n_{w'}·w'·b for a uniformly chosen w' ⪯ w."""
    from .sampling import sample_cell
    from .weyl import all_elements, bruhat_leq

    below = [u for u in all_elements(w.n) if bruhat_leq(u, w)]

    def sample(rng: random.Random):
        return sample_cell(rng, rng.choice(below), p, V, digits)

    return sample


def lemma_theta_check(chi: Character, w: WeylElement, j0: int, rng_for: Callable[[int], random.Random],
                      sampler: Sampler, trials: int, prec: int = DEFAULT_PRECISION,
                      u_level: int = 1) -> Report:
    """χ(w^-1 t' w)·f_w agrees with g = Σ_{m ∈ Θ} m t' f_w below w, and g is U^(1)-invariant.

    ``rng_for(k)`` yields the random stream of trial k; each trial checks one
    sampled point for the identity and one U^(1)-translate for invariance.
    """
    from .sampling import matmul, sample_u

    p, n = chi.p, w.n
    tp = tprime(n, j0, p, prec)
    g = PSElement(chi, [Term.make(chi.field.one, m, tp, w) for m in theta_representatives(w, j0, p, prec)])
    factor = chi(weyl_conjugate(w, tp))
    rep = Report("theta-lemma", details={"theta_size": len(g)})
    for k in range(trials):
        rng = rng_for(k)
        xq = sampler(rng)
        uq = sample_u(rng, n, p, u_level)
        rep.trials += 1
        try:
            x = PMatrix.from_rationals(xq, p, prec)
            lhs = factor * eval_fw(chi, w, x)
            rhs = eval_element(g, x)
            if lhs != rhs:
                rep.fail({"w": str(w), "j0": j0, "x": to_strings(xq)}, lhs, rhs)
                continue
            ux = PMatrix.from_rationals(matmul(uq, xq), p, prec)
            got = eval_element(g, ux)
            if got != rhs:
                rep.fail({"w": str(w), "j0": j0, "x": to_strings(xq), "u": to_strings(uq)}, rhs, got)
        except PrecisionError:
            rep.precision_aborts += 1
    return rep


def nprime_invariance_check(chi: Character, w: WeylElement, t: DiagElement,
                            rng_for: Callable[[int], random.Random], sampler: Sampler, trials: int,
                            prec: int = DEFAULT_PRECISION) -> Report:
    """n' t f_w and t f_w agree on ∪_{w' ⪯ w} U_{w'} for n' in N'_w ∩ N_0."""
    from .sampling import sample_nprime

    p = chi.p
    base = PSElement(chi, [Term.make(chi.field.one, PMatrix.identity(w.n, p, prec), t, w)])
    rep = Report("nprime-invariance")
    for k in range(trials):
        rng = rng_for(k)
        nq = sample_nprime(rng, w, p)
        xq = sampler(rng)
        rep.trials += 1
        try:
            nprime = PMatrix.from_rationals(nq, p, prec)
            moved = PSElement(chi, [Term.make(chi.field.one, nprime, t, w)])
            x = PMatrix.from_rationals(xq, p, prec)
            a, b = eval_element(moved, x), eval_element(base, x)
            if a != b:
                rep.fail({"w": str(w), "t": [str(d.to_fraction()) for d in t.entries], "n'": to_strings(nq),
                          "x": to_strings(xq)}, b, a)
        except PrecisionError:
            rep.precision_aborts += 1
    return rep


# -- the n = 3 counterexample ----------------------------------------------------


def _unipotent13(a: int, b: int, p: int, prec: int) -> PMatrix:
    return PMatrix.from_rationals([[1, a, b], [0, 1, 0], [0, 0, 1]], p, prec)


def counterexample_z(p: int, prec: int = DEFAULT_PRECISION) -> PMatrix:
    return PMatrix.from_rationals([[p * p, 0, 1], [1, 0, 0], [p, 1, 0]], p, prec)


def counterexample_h(chi: Character, prec: int = DEFAULT_PRECISION) -> PSElement:
    """h = Σ_{a, b < p^2} n_{ab} · diag(p^2, 1, 1) · f_{w_2}."""
    p = chi.p
    w2 = standard_ordering(3, "paper-n3")[2]
    t = DiagElement.from_valuations(p, [2, 0, 0], prec=prec)
    one = chi.field.one
    terms = [Term.make(one, _unipotent13(a, b, p, prec), t, w2, check=False)
             for a in range(p * p) for b in range(p * p)]
    return PSElement(chi, terms)


def check_counterexample_character(chi: Character) -> None:
    if chi.n != 3:
        raise CharacterNotAdmissible("the counterexample lives in GL_3")
    if chi.p < 3:
        raise CharacterNotAdmissible("p = 2 leaves no non-trivial tame characters of Z_2^*")
    if chi.e[0] == chi.e[1] or chi.e[1] == chi.e[2]:
        raise CharacterNotAdmissible("χ_1/χ_2 and χ_2/χ_3 must be non-trivial on Z_p^*")


def build_counterexample(chi: Character, prec: int = DEFAULT_PRECISION) -> tuple[PSElement, PMatrix]:
    """f = h - χ_3(p^2)^-1 Σ_{a, b < p^3} h(M_ab) · n_ab · f_{w_5} and the point z with f(z) ≠ 0.

    M_ab = [[a, b, 1], [1, 0, 0], [0, 1, 0]].  Correction terms whose
    coefficient h(M_ab) vanishes are dropped.
    """
    check_counterexample_character(chi)
    p = chi.p
    w5 = standard_ordering(3, "paper-n3")[5]
    h = counterexample_h(chi, prec)
    scale = -(chi.c[2] ** 2).inverse()
    ident = DiagElement.from_valuations(p, [0, 0, 0], prec=prec)
    corr = []
    for a in range(p**3):
        for b in range(p**3):
            coeff = eval_element(h, PMatrix.from_rationals([[a, b, 1], [1, 0, 0], [0, 1, 0]], p, prec))
            if coeff:
                corr.append(Term.make(scale * coeff, _unipotent13(a, b, p, prec), ident, w5, check=False))
    return PSElement(chi, h.terms + tuple(corr)), counterexample_z(p, prec)


# -- the t_0 averaging formula -------------------------------------------------


def t0_power(n: int, l: int, p: int, prec: int = DEFAULT_PRECISION) -> DiagElement:
    """t_0^l with t_0 = diag(p^(n-1), ..., p, 1)."""
    return DiagElement.from_valuations(p, [l * (n - 1 - i) for i in range(n)], prec=prec)


def quotient_representatives(n: int, l: int, p: int, prec: int = DEFAULT_PRECISION) -> list[PMatrix]:
    """Digit representatives of (N_0 ∩ U^(l)) / t_0^l N_0 t_0^-l.

    Position (i, j) ranges over p^l·a with 0 <= a < p^(l(j-i-1)), the gap
    between the valuation floors l and l(j-i) of the two groups there.
    """
    import itertools

    positions = [(i, j) for i in range(n) for j in range(i + 1, n)]
    ranges = [range(p ** (l * (j - i - 1))) for i, j in positions]
    reps = []
    for digits in itertools.product(*ranges):
        rows = [[int(i == j) for j in range(n)] for i in range(n)]
        for (i, j), a in zip(positions, digits):
            rows[i][j] = p**l * a
        reps.append(PMatrix.from_rationals(rows, p, prec))
    return reps


def averaged_fw(chi: Character, w: WeylElement, l: int, prec: int = DEFAULT_PRECISION) -> PSElement:
    """Σ_n n t_0^l f_w over :func:`quotient_representatives`."""
    t = t0_power(w.n, l, chi.p, prec)
    one = chi.field.one
    return PSElement(chi, [Term.make(one, m, t, w) for m in quotient_representatives(w.n, l, chi.p, prec)])


def quotient_formula_check(chi: Character, w: WeylElement, l: int, rng_for: Callable[[int], random.Random],
                           trials: int, prec: int = DEFAULT_PRECISION) -> Report:
    """Σ_n n t_0^l f_w(r b) = χ^-1(b) if r ∈ U^(l) w, else 0, for r ∈ R_w and b ∈ B."""
    from .sampling import matmul, sample_rw, sample_upper

    p = chi.p
    avg = averaged_fw(chi, w, l, prec)
    rep = Report("quotient-formula", details={"representatives": len(avg)})
    for k in range(trials):
        rng = rng_for(k)
        rq = sample_rw(rng, w, p)
        bq = sample_upper(rng, w.n, p)
        rep.trials += 1
        try:
            r = PMatrix.from_rationals(rq, p, prec)
            b = PMatrix.from_rationals(bq, p, prec)
            x = PMatrix.from_rationals(matmul(rq, bq), p, prec)
            expected = char_eval(chi, b).inverse() if in_UlwB(r, w, l) else chi.field.zero
            got = eval_element(avg, x)
            if got != expected:
                rep.fail({"w": str(w), "l": l, "r": to_strings(rq), "b": to_strings(bq)}, expected, got)
        except PrecisionError:
            rep.precision_aborts += 1
    return rep

