from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from fd2p.errors import ConfigError, ContextError
from fd2p.fields import (FieldParams, find_irreducible, is_irreducible, is_prime, parse_poly, poly_mulmod)


def _reducible_by_brute_force(f, p):
    """Oracle: f has a monic factor of degree 1..deg/2."""
    n = len(f) - 1
    for d in range(1, n // 2 + 1):
        for low in product(range(p), repeat=d):
            g = list(low) + [1]
            # long division remainder
            r = list(f)
            for shift in range(n - d, -1, -1):
                c = r[shift + d]
                if c:
                    for i, gc in enumerate(g):
                        r[shift + i] = (r[shift + i] - c * gc) % p
            if not any(r):
                return True
    return False


@pytest.mark.parametrize("p,n,want", [(3, 1, (0, 1)), (3, 2, (1, 0, 1)), (5, 2, (2, 0, 1))])
def test_find_irreducible_examples(p, n, want):
    assert find_irreducible(p, n) == want


@pytest.mark.parametrize("p,n", [(3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2)])
def test_irreducibility_matches_brute_force(p, n):
    for low in product(range(p), repeat=n):
        f = tuple(low) + (1,)
        assert is_irreducible(f, p) == (not _reducible_by_brute_force(f, p))


@pytest.mark.parametrize("p", [2, 4, 9, 15, 1, 0, -3])
def test_bad_characteristic(p):
    with pytest.raises(ConfigError, match="characteristic p > 2"):
        FieldParams(p, 1)


def test_bad_degree_and_poly():
    with pytest.raises(ConfigError):
        FieldParams(3, 0)
    with pytest.raises(ConfigError, match="reducible"):
        FieldParams(3, 2, (2, 0, 1))  # x^2 + 2 = (x - 1)(x + 1)
    with pytest.raises(ConfigError):
        FieldParams(3, 2, (1, 1))
    with pytest.raises(ConfigError):
        parse_poly("1,x,1")
    assert parse_poly("1, 0,1") == (1, 0, 1)


def test_is_prime():
    assert [m for m in range(30) if is_prime(m)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_multiplicative_group_order():
    F = FieldParams(3, 2)
    nonzero = [x for x in F.elements() if not x.is_zero()]
    assert len(nonzero) == 8
    assert all(x ** 8 == F.one for x in nonzero)
    assert len({F.alpha_pow(i) for i in range(8)}) in (4, 8)


def test_mixing_fields_raises():
    with pytest.raises(ContextError):
        FieldParams(3, 1).one + FieldParams(5, 1).one
    with pytest.raises(ZeroDivisionError):
        FieldParams(5, 1).zero.inverse()


FIELDS = [FieldParams(3, 1), FieldParams(3, 2), FieldParams(5, 2), FieldParams(7, 3)]


@st.composite
def field_triples(draw):
    F = draw(st.sampled_from(FIELDS))
    el = st.integers(0, F.q - 1).map(F.from_code)
    return F, draw(el), draw(el), draw(el)


@settings(max_examples=150, deadline=None)
@given(field_triples())
def test_field_axioms(t):
    F, x, y, z = t
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == F.zero
    if not x.is_zero():
        assert x * x.inverse() == F.one
        assert (y / x) * x == y
    assert F.from_code(x.code) == x


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.lists(st.integers(0, 50), min_size=1, max_size=6),
       st.lists(st.integers(0, 50), min_size=1, max_size=6))
def test_poly_mulmod_agrees_with_field(p, a, b):
    F = FieldParams(p, 2)
    expect = F.element(a) * F.element(b)
    got = poly_mulmod(a, b, F.f, p)
    assert F.element(got) == expect
