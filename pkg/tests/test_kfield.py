import pytest
from hypothesis import given
from hypothesis import strategies as st

from padic_bruhat.kfield import GF, first_irreducible

FIELDS = [GF(2), GF(3), GF(5), GF(2, (1, 1, 1)), GF(3, (1, 0, 1)), GF(5, first_irreducible(5, 3))]


def elems(F):
    return st.lists(st.integers(0, F.p - 1), min_size=F.degree, max_size=F.degree).map(F)


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_order_divides(F):
    for x in F.elements():
        if x:
            assert (F.order - 1) % x.multiplicative_order() == 0
            assert x ** (F.order - 1) == 1


@pytest.mark.parametrize("F", FIELDS, ids=repr)
def test_field_axioms(F):
    @given(elems(F), elems(F), elems(F))
    def check(a, b, c):
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        if a:
            assert a * a.inverse() == F.one
            assert a ** -2 == (a * a).inverse()

    check()


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        GF(2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2 over F_2


def test_json_forms():
    assert GF(3)(5).to_json() == "2"
    F4 = GF(2, (1, 1, 1))
    assert F4([0, 1]).to_json() == [0, 1]
    assert F4([0, 1]) ** 3 == 1
