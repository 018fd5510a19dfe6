"""Seeded verification suites.

Each suite takes a :class:`RunConfig` and returns a :class:`Report`.  Trial k
of suite s draws from ``random.Random(f"{seed}/{s}/{k}")`` so a report depends
only on the configuration.  Precision failures are tallied as aborts and never
counted as failures.
"""

from __future__ import annotations

import dataclasses
import itertools
import json
from dataclasses import dataclass
from typing import Callable

from .decomp import bruhat_cell, classify_Uw, matches_Rw, rb_decompose
from .errors import DimensionMismatch, PrecisionError
from .matrix import DiagElement, PMatrix
from .padic import DEFAULT_PRECISION
from .principal_series import (
    Character,
    Report,
    build_counterexample,
    eval_element,
    generic_character,
    lemma_theta_check,
    lower_cells_sampler,
    nprime_invariance_check,
    quotient_formula_check,
)
from .sampling import (
    inverse,
    matmul,
    sample_cell,
    sample_gl,
    sample_n0,
    sample_rw,
    sample_tplus,
    sample_u,
    to_strings,
    trial_rng,
)
from .weyl import all_elements, bruhat_leq, bruhat_leq_chain, standard_ordering

RECONSTRUCTION_DIGITS = 40
ORACLE_PRECISION = 64


@dataclass(frozen=True)
class RunConfig:
    p: int = 3
    n: int = 3
    precision: int = DEFAULT_PRECISION
    seed: int = 0
    trials: int = 1000
    preset: str = "default"
    chi: dict | None = None
    valwindow: int = 2

    def to_json(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_json(cls, obj) -> "RunConfig":
        if isinstance(obj, str):
            obj = json.loads(obj)
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(obj) - names
        if unknown:
            raise ValueError(f"unknown configuration keys {sorted(unknown)}")
        return cls(**obj)

    def replace(self, **kw) -> "RunConfig":
        return dataclasses.replace(self, **kw)

    def character(self) -> Character:
        if self.chi is None:
            return generic_character(self.p, self.n)
        chi = Character.from_json(self.chi)
        if chi.p != self.p or chi.n != self.n:
            raise DimensionMismatch("character does not match --p/--n")
        return chi

    def rng_for(self, suite: str) -> Callable[[int], object]:
        return lambda k: trial_rng(self.seed, suite, k)


def _pm(m, cfg: RunConfig, prec: int | None = None) -> PMatrix:
    return PMatrix.from_rationals(m, cfg.p, prec or cfg.precision)


# -- decomposition suites --------------------------------------------------------


def _reconstruction_trial(gq, cfg: RunConfig):
    """(w, r, b, problems) for one matrix."""
    g = _pm(gq, cfg)
    d = rb_decompose(g)
    problems = []
    floor = min(x.val for row in g.rows for x in row if not x.is_zero())
    diff = d.r @ d.b - g
    for i, row in enumerate(diff.rows):
        for j, x in enumerate(row):
            gij = g.rows[i][j]
            need = (gij.val if not gij.is_zero() else floor) + RECONSTRUCTION_DIGITS
            if not x.is_zero():
                problems.append(f"(rb - g)[{i + 1},{j + 1}] = {x!r}")
            elif x.absprec < need and cfg.precision >= ORACLE_PRECISION:
                problems.append(f"(rb - g)[{i + 1},{j + 1}] only known to O(p^{x.absprec})")
    matching = [w for w in all_elements(cfg.n) if matches_Rw(d.r, w)]
    if matching != [d.w]:
        problems.append(f"r matches the patterns {[str(w) for w in matching]}")
    return d, problems


def suite_reconstruction(cfg: RunConfig) -> Report:
    rep = Report("reconstruction")
    rng_for = cfg.rng_for(rep.suite)
    for k in range(cfg.trials):
        gq = sample_gl(rng_for(k), cfg.n, cfg.p, cfg.valwindow)
        rep.trials += 1
        try:
            d, problems = _reconstruction_trial(gq, cfg)
        except PrecisionError:
            rep.precision_aborts += 1
            continue
        if problems:
            rep.fail({"g": to_strings(gq)}, "r·b = g with r in exactly one R_w", problems)
    return rep


def suite_disjointness(cfg: RunConfig) -> Report:
    """Pattern matrices of R_w decompose to (w, themselves, identity) and match no other pattern."""
    rep = Report("disjointness")
    rng_for = cfg.rng_for(rep.suite)
    ws = all_elements(cfg.n)
    k = 0
    for w in ws:
        for _ in range(cfg.trials):
            rq = sample_rw(rng_for(k), w, cfg.p)
            k += 1
            rep.trials += 1
            try:
                r = _pm(rq, cfg)
                d = rb_decompose(r)
                ident = PMatrix.identity(cfg.n, cfg.p, cfg.precision)
                others = [str(u) for u in ws if u != w and matches_Rw(r, u)]
                if d.w != w or not (d.r == r) or not (d.b == ident) or others:
                    rep.fail({"g": to_strings(rq), "w": str(w)}, str(w),
                             {"w": str(d.w), "also_matches": others})
            except PrecisionError:
                rep.precision_aborts += 1
    return rep


def suite_n0_invariance(cfg: RunConfig) -> Report:
    """classify_Uw(n·g) = classify_Uw(g) for n in N_0, and likewise for u in U^(1)."""
    rep = Report("n0-invariance")
    rng_for = cfg.rng_for(rep.suite)
    for k in range(cfg.trials):
        rng = rng_for(k)
        gq = sample_gl(rng, cfg.n, cfg.p, cfg.valwindow)
        nq = sample_n0(rng, cfg.n, cfg.p)
        uq = sample_u(rng, cfg.n, cfg.p)
        rep.trials += 1
        try:
            w = classify_Uw(_pm(gq, cfg))
            for name, left in (("n", nq), ("u", uq)):
                got = classify_Uw(_pm(matmul(left, gq), cfg))
                if got != w:
                    rep.fail({"g": to_strings(gq), name: to_strings(left)}, str(w), str(got))
        except PrecisionError:
            rep.precision_aborts += 1
    return rep


def _bplus_trial(rng, cfg: RunConfig):
    gq = sample_gl(rng, cfg.n, cfg.p, cfg.valwindow)
    nq = sample_n0(rng, cfg.n, cfg.p)
    tq = sample_tplus(rng, cfg.n, cfg.p)
    moved = matmul(inverse(tq), matmul(inverse(nq), gq))
    return gq, nq, tq, moved


def suite_bplus_monotonicity(cfg: RunConfig) -> Report:
    """classify_Uw(t^-1 n^-1 g) ⪯ classify_Uw(g) for n t in B_+."""
    rep = Report("bplus-monotonicity")
    rng_for = cfg.rng_for(rep.suite)
    for k in range(cfg.trials):
        gq, nq, tq, moved = _bplus_trial(rng_for(k), cfg)
        rep.trials += 1
        try:
            w = classify_Uw(_pm(gq, cfg))
            w2 = classify_Uw(_pm(moved, cfg))
        except PrecisionError:
            rep.precision_aborts += 1
            continue
        if not bruhat_leq(w2, w):
            rep.fail({"g": to_strings(gq), "n": to_strings(nq), "t": to_strings(tq)},
                     f"⪯ {w}", str(w2))
    return rep


def suite_cell_inclusion(cfg: RunConfig) -> Report:
    """N_w w B ⊂ ∪_{w' ⪯ w} U_{w'}, and bruhat_cell recovers w."""
    rep = Report("cell-inclusion")
    rng_for = cfg.rng_for(rep.suite)
    k = 0
    for w in all_elements(cfg.n):
        for _ in range(cfg.trials):
            gq = sample_cell(rng_for(k), w, cfg.p, cfg.valwindow)
            k += 1
            rep.trials += 1
            try:
                g = _pm(gq, cfg)
                u = classify_Uw(g)
                cell = bruhat_cell(g)
            except PrecisionError:
                rep.precision_aborts += 1
                continue
            if not bruhat_leq(u, w) or cell != w:
                rep.fail({"g": to_strings(gq), "w": str(w)}, {"U_w ⪯": str(w), "cell": str(w)},
                         {"U_w": str(u), "cell": str(cell)})
    return rep


def suite_bruhat_oracle(cfg: RunConfig) -> Report:
    """Tableau criterion against the transposition-chain closure on every pair of S_n."""
    rep = Report("bruhat-oracle")
    ws = all_elements(cfg.n)
    for u, w in itertools.product(ws, ws):
        rep.trials += 1
        a, b = bruhat_leq(u, w), bruhat_leq_chain(u, w)
        if a != b:
            rep.fail({"u": str(u), "w": str(w)}, b, a)
    rep.details["pairs"] = rep.trials
    return rep


# -- principal series suites -------------------------------------------------------


def suite_theta_lemma(cfg: RunConfig) -> Report:
    chi = cfg.character()
    rep = Report("theta-lemma", details={"cases": 0})
    for w in all_elements(cfg.n):
        for j0 in range(1, cfg.n):
            name = f"theta-lemma/{w}/{j0}"
            sub = lemma_theta_check(chi, w, j0, cfg.rng_for(name), lower_cells_sampler(w, cfg.p, cfg.valwindow),
                                    cfg.trials, cfg.precision)
            rep.merge(sub)
            rep.details["cases"] += 1
    return rep


def suite_nprime_invariance(cfg: RunConfig) -> Report:
    chi = cfg.character()
    rep = Report("nprime-invariance")
    for w in all_elements(cfg.n):
        name = f"nprime-invariance/{w}"
        tq = sample_tplus(cfg.rng_for(name + "/t")(0), cfg.n, cfg.p)
        tm = _pm(tq, cfg)
        t = DiagElement(tuple(tm.rows[i][i] for i in range(cfg.n)))
        sub = nprime_invariance_check(chi, w, t, cfg.rng_for(name), lower_cells_sampler(w, cfg.p, cfg.valwindow),
                                      cfg.trials, cfg.precision)
        rep.merge(sub)
    return rep


def suite_quotient_formula(cfg: RunConfig, levels=(1, 2)) -> Report:
    chi = cfg.character()
    rep = Report("quotient-formula", details={"cases": []})
    for l in levels:
        for m, w in enumerate(standard_ordering(cfg.n, cfg.preset), 1):
            sub = quotient_formula_check(chi, w, l, cfg.rng_for(f"quotient-formula/{l}/{m}"), cfg.trials,
                                         cfg.precision)
            rep.merge(sub)
            rep.details["cases"].append({"l": l, "m": m, "w": str(w), "failures": len(sub.failures),
                                         "representatives": sub.details["representatives"]})
    return rep


def counterexample_samples(cfg: RunConfig, count: int, suite: str = "counterexample"):
    """Rational samples of G_5 = ∪_{l ≤ 5} B w_l B, cells drawn uniformly."""
    order = standard_ordering(3, "paper-n3")
    rng_for = cfg.rng_for(suite)
    out = []
    for k in range(count):
        rng = rng_for(k)
        w = order[rng.randint(1, 5)]
        out.append(sample_cell(rng, w, cfg.p, cfg.valwindow))
    return out


def _counterexample_values(cfg: RunConfig, prec: int):
    chi = cfg.character()
    f, z = build_counterexample(chi, prec)
    return f, eval_element(f, z)


def suite_counterexample(cfg: RunConfig) -> Report:
    """f(z) ≠ 0 while f vanishes on sampled points of G_5."""
    if cfg.n != 3:
        raise DimensionMismatch("the counterexample lives in GL_3")
    rep = Report("counterexample")
    f, fz = _counterexample_values(cfg, cfg.precision)
    rep.trials += 1
    if not fz:
        rep.fail({"z": "z"}, "non-zero", fz)
    vanishing = 0
    for xq in counterexample_samples(cfg, cfg.trials):
        rep.trials += 1
        try:
            val = eval_element(f, _pm(xq, cfg))
        except PrecisionError:
            rep.precision_aborts += 1
            continue
        if val:
            rep.fail({"g": to_strings(xq)}, "0", val)
        else:
            vanishing += 1
    rep.details.update({"f(z)": fz.to_json(), "terms": len(f), "vanishing_samples": vanishing,
                        "character": cfg.character().to_json()})
    return rep


# -- precision honesty ------------------------------------------------------------


def suite_precision_honesty(cfg: RunConfig) -> Report:
    """Suites 1, 3 and 8 at cfg.precision against a precision-64 oracle.

    Every low-precision answer must agree with the oracle or abort with
    InsufficientPrecision.
    """
    rep = Report("precision-honesty", details={})
    hi = cfg.replace(precision=max(ORACLE_PRECISION, cfg.precision))
    lo = cfg

    def compare(tag, inp, run):
        rep.trials += 1
        try:
            oracle = run(hi)
        except PrecisionError:
            rep.details[tag]["oracle_aborts"] = rep.details[tag].get("oracle_aborts", 0) + 1
            return
        try:
            got = run(lo)
        except PrecisionError:
            # SingularToPrecision is an explicit refusal as well
            rep.precision_aborts += 1
            rep.details[tag]["aborts"] += 1
            return
        if not _same(oracle, got):
            rep.fail(inp, _show(oracle), _show(got))
        else:
            rep.details[tag]["agree"] += 1

    rng_for = cfg.rng_for("precision-honesty/reconstruction")
    rep.details["reconstruction"] = {"agree": 0, "aborts": 0}
    for k in range(cfg.trials):
        gq = sample_gl(rng_for(k), cfg.n, cfg.p, cfg.valwindow)
        compare("reconstruction", {"g": to_strings(gq)}, lambda c, gq=gq: rb_decompose(_pm(gq, c)))

    rng_for = cfg.rng_for("precision-honesty/bplus")
    rep.details["bplus-monotonicity"] = {"agree": 0, "aborts": 0}
    for k in range(cfg.trials):
        gq, nq, tq, moved = _bplus_trial(rng_for(k), cfg)
        compare("bplus-monotonicity", {"g": to_strings(gq), "n": to_strings(nq), "t": to_strings(tq)},
                lambda c, gq=gq, moved=moved: (classify_Uw(_pm(gq, c)), classify_Uw(_pm(moved, c))))

    if cfg.n == 3 and cfg.p >= 3:
        rep.details["counterexample"] = {"agree": 0, "aborts": 0}
        chi = cfg.character()
        f_hi, _ = build_counterexample(chi, hi.precision)
        try:
            f_lo, _ = build_counterexample(chi, lo.precision)
        except PrecisionError:
            f_lo = None
        points = [[[cfg.p**2, 0, 1], [1, 0, 0], [cfg.p, 1, 0]]] + counterexample_samples(
            cfg, cfg.trials, "precision-honesty/counterexample")
        for xq in points:
            if f_lo is None:
                rep.trials += 1
                rep.precision_aborts += 1
                rep.details["counterexample"]["aborts"] += 1
                continue
            compare("counterexample", {"g": to_strings(xq)},
                    lambda c, xq=xq: eval_element(f_hi if c is hi else f_lo, _pm(xq, c)))
    return rep


def _same(a, b) -> bool:
    if isinstance(a, tuple):
        return len(a) == len(b) and all(_same(x, y) for x, y in zip(a, b))
    if hasattr(a, "r") and hasattr(a, "b"):
        return a.w == b.w and a.r == b.r and a.b == b.b
    return a == b


def _show(x):
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, tuple):
        return [_show(y) for y in x]
    return str(x)


SUITES: dict[str, Callable[[RunConfig], Report]] = {
    "reconstruction": suite_reconstruction,
    "disjointness": suite_disjointness,
    "n0-invariance": suite_n0_invariance,
    "bplus-monotonicity": suite_bplus_monotonicity,
    "cell-inclusion": suite_cell_inclusion,
    "bruhat-oracle": suite_bruhat_oracle,
    "theta-lemma": suite_theta_lemma,
    "nprime-invariance": suite_nprime_invariance,
    "quotient-formula": suite_quotient_formula,
    "counterexample": suite_counterexample,
    "precision-honesty": suite_precision_honesty,
}


def run_suite(name: str, cfg: RunConfig) -> Report:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(name) from None
    return fn(cfg)
