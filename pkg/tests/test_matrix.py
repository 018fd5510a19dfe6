from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from padic_bruhat.errors import SingularToPrecision
from padic_bruhat.matrix import DiagElement, PMatrix, elementary_diag, mat_inv, membership
from padic_bruhat.padic import padic_from_rational
from padic_bruhat.sampling import sample_gl, sample_nw, sample_tplus, trial_rng
from padic_bruhat.weyl import WeylElement, all_elements

P = 3
seeds = st.integers(0, 2**32)


def pm(rows, p=P, prec=64):
    return PMatrix.from_rationals(rows, p, prec)


def test_inverse_examples():
    assert mat_inv(pm([[1, 1], [0, 1]])) == pm([[1, -1], [0, 1]])
    inv = mat_inv(pm([[3, 0], [0, 1]]))
    assert inv == pm([[Fraction(1, 3), 0], [0, 1]])
    assert inv.rows[0][0].val == -1
    for w in all_elements(3):
        assert mat_inv(w.matrix(P)) == w.inverse().matrix(P)


def test_singular_matrix():
    with pytest.raises(SingularToPrecision):
        mat_inv(pm([[1, 2], [2, 4]]))


def test_membership_examples():
    ident = PMatrix.identity(3, P)
    for tag in ("B", "N", "N0", "N-", "T", "T+", "G0"):
        assert membership(ident, tag)
    assert membership(ident, "U", level=2)
    w12 = WeylElement.parse("2,1,3")
    for a in (0, 1, 7, Fraction(2, 5)):
        assert membership(pm([[1, a, 0], [0, 1, 0], [0, 0, 1]]), "Nw", w=w12)
    assert not membership(pm([[1, 0, 1], [0, 1, 0], [0, 0, 1]]), "Nw", w=w12)
    assert membership(pm([[3, 0, 0], [0, 3, 0], [0, 0, 1]]), "T+")
    assert not membership(pm([[1, 0, 0], [0, 3, 0], [0, 0, Fraction(1, 3)]]), "T+")
    assert membership(pm([[1, 0], [9, 1]]), "U", level=2)
    assert not membership(pm([[1, 0], [9, 1]]), "U", level=3)


def test_elementary_diag():
    p = padic_from_rational(3, 1, P, 64)
    one = padic_from_rational(1, 1, P, 64)
    assert elementary_diag(1, p, 3) == pm([[3, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert elementary_diag(2, one, 3) == PMatrix.identity(3, P)
    prod = elementary_diag(1, p, 3) @ elementary_diag(2, p, 3) @ elementary_diag(3, p, 3)
    assert prod == pm([[3, 0, 0], [0, 3, 0], [0, 0, 3]])


@given(seeds, st.sampled_from([2, 3, 5]), st.integers(2, 4))
def test_inverse_round_trip(seed, p, n):
    g = pm(sample_gl(trial_rng(seed, "inv", 0), n, p, V=3), p)
    prod = g @ mat_inv(g)
    ident = PMatrix.identity(n, p)
    assert prod == ident
    # measured loss stays far below the working precision
    assert prod.min_absprec() >= 64 - 30


@given(seeds, st.integers(2, 4))
def test_tplus_closed_under_products(seed, n):
    rng = trial_rng(seed, "tplus", 0)
    m1, m2 = pm(sample_tplus(rng, n, P)), pm(sample_tplus(rng, n, P))
    t1 = DiagElement(tuple(m1.rows[i][i] for i in range(n)))
    t2 = DiagElement(tuple(m2.rows[i][i] for i in range(n)))
    assert t1.in_Tplus() and t2.in_Tplus()
    assert (t1 * t2).in_Tplus()
    assert membership((t1 * t2).matrix(), "T+")


@given(seeds, st.integers(2, 4))
def test_tplus_contracts_Nw(seed, n):
    rng = trial_rng(seed, "contract", 0)
    w = rng.choice(all_elements(n))
    m = pm(sample_nw(rng, w, P, V=2))
    # gaps of 3 beat entries of valuation >= -2
    t = DiagElement.from_valuations(P, [3 * (n - 1 - i) for i in range(n)])
    assert membership(t.conjugate(m), "N0")


def test_json_round_trip():
    g = pm([["9/2", "0"], ["1", "-3"]])
    assert PMatrix.from_json(g.to_json(), P) == g
