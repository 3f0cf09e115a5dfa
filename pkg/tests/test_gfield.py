import pytest
from hypothesis import given, strategies as st

from twinlab.gfield import (field_new, parse_field, FieldError, smallest_irreducible,
                            is_irreducible, prime_factors)

SMALL = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4)]


@pytest.fixture(params=SMALL, ids=lambda pk: "GF(%d^%d)" % pk)
def K(request):
    return field_new(*request.param)


def test_sizes(K):
    assert len(K.elements()) == K.q
    assert len(K.units()) == K.q - 1
    assert K.zero not in K.units()


def test_shared_instance():
    assert field_new(3, 2) is field_new(3, 2)


def test_moduli_are_smallest():
    assert smallest_irreducible(2, 2) == (1, 1, 1)
    assert smallest_irreducible(2, 3) == (1, 1, 0, 1)
    assert smallest_irreducible(3, 2) == (1, 0, 1)
    for p, k in [(2, 4), (5, 2), (3, 3)]:
        assert is_irreducible(smallest_irreducible(p, k), p)


def test_parse():
    assert parse_field("2^2") is field_new(2, 2)
    assert parse_field("4") is field_new(2, 2)
    assert parse_field("9").q == 9
    for bad in ("6", "1", "x", "12"):
        with pytest.raises(FieldError):
            parse_field(bad)


def test_mixing_contexts_raises():
    with pytest.raises(FieldError):
        field_new(2).one + field_new(3).one


def test_prime_factors():
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(1) == []


@given(st.sampled_from(SMALL), st.data())
def test_field_axioms(pk, data):
    K = field_new(*pk)
    el = st.sampled_from(K.elements())
    a, b, c = data.draw(el), data.draw(el), data.draw(el)
    assert a + b == b + a and a*b == b*a
    assert (a + b) + c == a + (b + c)
    assert (a*b)*c == a*(b*c)
    assert a*(b + c) == a*b + a*c
    assert a - a == K.zero and a + K.zero == a and a*K.one == a
    if a:
        assert a*a.inv() == K.one
        assert a**(K.q - 1) == K.one
    # Frobenius is additive
    assert (a + b)**K.p == a**K.p + b**K.p


def test_characteristic(K):
    s = K.zero
    for _ in range(K.p):
        s = s + K.one
    assert s == K.zero


def test_units_cyclic(K):
    g = K.primitive()
    powers = {g**n for n in range(K.q - 1)}
    assert len(powers) == K.q - 1
