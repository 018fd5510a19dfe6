import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from padic_bruhat.decomp import (
    bruhat_cell,
    classify_Uw,
    in_UlwB,
    matches_Rw,
    rb_decompose,
    rw_pattern,
    sample_cell,
)
from padic_bruhat.errors import InsufficientPrecision, SingularToPrecision
from padic_bruhat.matrix import PMatrix, membership
from padic_bruhat.padic import PAdic
from padic_bruhat.sampling import matmul, sample_gl, sample_n0, sample_rw, sample_u, sample_upper, trial_rng
from padic_bruhat.weyl import WeylElement, all_elements, bruhat_leq

W = WeylElement.parse
seeds = st.integers(0, 2**32)
primes = st.sampled_from([2, 3, 5])
dims = st.integers(2, 4)


def pm(rows, p=3, prec=64):
    return PMatrix.from_rationals(rows, p, prec)


# -- worked examples -------------------------------------------------------------


def test_lower_unipotent_is_its_own_r():
    g = pm([[1, 0, 0], [3, 1, 0], [3, 3, 1]])
    d = rb_decompose(g)
    assert d.w == WeylElement.identity(3) and d.r == g and d.b == PMatrix.identity(3, 3)
    assert rw_pattern(d.w) == [["1", "0", "0"], ["po", "1", "0"], ["po", "po", "1"]]


def test_two_by_two_hand_run():
    d = rb_decompose(pm([[1, 0], [1, 1]]))
    assert d.w == W("2,1")
    assert d.r == pm([[1, 1], [1, 0]])
    assert d.b == pm([[1, 1], [0, -1]])
    assert rw_pattern(d.w) == [["o", "1"], ["1", "0"]]


def test_counterexample_point():
    z = pm([[9, 0, 1], [1, 0, 0], [3, 1, 0]])
    d = rb_decompose(z)
    assert d.w == W("2,3,1") and d.r == z and d.b == PMatrix.identity(3, 3)
    assert rw_pattern(d.w) == [["o", "o", "1"], ["1", "0", "0"], ["po", "1", "0"]]
    assert bruhat_cell(z) == WeylElement.longest(3)


def test_json_shape():
    out = rb_decompose(pm([[9, 0, 1], [1, 0, 0], [3, 1, 0]], prec=4)).to_json()
    assert out["w"] == "2,3,1" and out["precision"] == 4
    assert out["r"][0][2] == {"val": 0, "digits": [1, 0, 0, 0]}


def test_classify_examples():
    assert classify_Uw(pm([[2, 5, 1], [0, 3, 7], [0, 0, 1]])) == WeylElement.identity(3)
    for w in all_elements(3):
        assert classify_Uw(w.matrix(3)) == w
        assert bruhat_cell(w.matrix(3)) == w


def test_in_UlwB_examples():
    w = W("2,3,1")
    b = pm([[2, 1, 5], [0, 3, 1], [0, 0, 7]])
    assert in_UlwB(w.matrix(3) @ b, w, 1)
    g = pm([[1, 1, 0], [0, 1, 0], [0, 0, 1]]) @ w.matrix(3)
    assert not in_UlwB(g, w, 1)
    ident = WeylElement.identity(3)
    h = pm([[1, 0, 0], [9, 1, 0], [0, 0, 1]])
    assert in_UlwB(h, ident, 2) and not in_UlwB(h, ident, 3)


def test_bruhat_cell_big_cell_gl2():
    assert bruhat_cell(pm([[1, 0], [1, 1]])) == W("2,1")


def test_singular_and_undecidable():
    with pytest.raises(SingularToPrecision):
        rb_decompose(pm([[1, 2], [2, 4]]))
    # the first column is 1 and O(3^0): which row pivots cannot be decided
    g = PMatrix([[PAdic.from_rational(1, 3, 4), PAdic.from_rational(1, 3, 4)],
                 [PAdic.zero(3, 0), PAdic.from_rational(1, 3, 4)]], 3)
    with pytest.raises(InsufficientPrecision):
        rb_decompose(g)


# -- properties ------------------------------------------------------------------


@given(seeds, primes, dims)
def test_reconstruction_and_unique_pattern(seed, p, n):
    gq = sample_gl(trial_rng(seed, "t", 0), n, p)
    g = pm(gq, p)
    d = rb_decompose(g)
    assert d.r @ d.b == g
    assert membership(d.b, "B")
    assert [w for w in all_elements(n) if matches_Rw(d.r, w)] == [d.w]


@given(seeds, primes, dims)
def test_right_B_equivariance(seed, p, n):
    rng = trial_rng(seed, "t", 0)
    gq, bq = sample_gl(rng, n, p), sample_upper(rng, n, p)
    d = rb_decompose(pm(gq, p))
    e = rb_decompose(pm(matmul(gq, bq), p))
    assert e.w == d.w and e.r == d.r and e.b == d.b @ pm(bq, p)


@given(seeds, primes, dims)
def test_left_invariance(seed, p, n):
    rng = trial_rng(seed, "t", 0)
    gq = sample_gl(rng, n, p)
    w = classify_Uw(pm(gq, p))
    assert classify_Uw(pm(matmul(sample_n0(rng, n, p), gq), p)) == w
    assert classify_Uw(pm(matmul(sample_u(rng, n, p), gq), p)) == w


@given(seeds, st.sampled_from([2, 3]), st.integers(2, 4))
def test_cell_sampler_round_trip(seed, p, n):
    rng = trial_rng(seed, "t", 0)
    w = rng.choice(all_elements(n))
    g = sample_cell(w, p, rng)
    assert bruhat_cell(g) == w
    assert bruhat_leq(classify_Uw(g), w)


@given(seeds, st.sampled_from([3, 4]))
def test_patterns_are_disjoint(seed, n):
    rng = trial_rng(seed, "t", 0)
    w = rng.choice(all_elements(n))
    r = pm(sample_rw(rng, w, 3))
    assert [u for u in all_elements(n) if matches_Rw(r, u)] == [w]
    d = rb_decompose(r)
    assert d.w == w and d.r == r


@given(seeds, st.integers(1, 3))
def test_level_monotone(seed, level):
    rng = trial_rng(seed, "t", 0)
    w = rng.choice(all_elements(3))
    g = pm(matmul(sample_rw(rng, w, 3, kmax=4), sample_upper(rng, 3, 3)))
    if in_UlwB(g, w, level):
        assert all(in_UlwB(g, w, k) for k in range(1, level + 1))


@given(seeds, st.sampled_from([2, 3, 5]))
def test_support_matches_minor_oracle(seed, p):
    rng = trial_rng(seed, "t", 0)
    w = rng.choice(all_elements(3))
    gq = matmul(sample_rw(rng, w, p), sample_upper(rng, 3, p)) if rng.random() < 0.7 else sample_gl(rng, 3, p)
    for u in all_elements(3):
        assert in_UlwB(pm(gq, p), u, 1) == oracles.in_U1wB(gq, u, p)
