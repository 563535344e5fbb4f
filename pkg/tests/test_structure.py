import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fd2p.algebra import AlgebraContext, QuotientElement, in_gamma_A, is_unitary
from fd2p.constructions import (center_basis, ldu_subspaces, omega, omega_prime, symmetric_basis,
                                unitary_basis)
from fd2p.errors import BoundExceeded
from fd2p import structure as S


def test_closure_examples(ctx3):
    h = S.closure([ctx3.a])
    assert h.elements == {ctx3.one, ctx3.a, ctx3.a ** 2}
    k = S.closure([ctx3.b, -ctx3.one])
    assert k.order == 4 and all(x * x == ctx3.one for x in k.elements)
    assert S.closure(unitary_basis(ctx3) + [ctx3.b, -ctx3.one]).order == 12


def test_closure_bound_is_soft(ctx5):
    with pytest.raises(BoundExceeded) as e:
        S.closure(center_basis(ctx5), order_bound=10)
    assert e.value.count == 11


def test_unitary_enumeration(ctx3, ctx5):
    h = S.enumerate_unitary_in_one_plus_gamma(ctx3)
    assert h.elements == {ctx3.one, ctx3.a, ctx3.a ** 2}
    assert all(x.b_part.is_zero() for x in h.elements)
    assert S.enumerate_unitary_in_one_plus_gamma(ctx5).order == 25
    with pytest.raises(BoundExceeded):
        S.enumerate_unitary_in_one_plus_gamma(ctx5, bound=10 ** 5)


def test_unitary_enumeration_against_python_filter(ctx3):
    # independent oracle: filter 1 + Gamma(A) with is_unitary directly
    direct = {v for v in S.iter_one_plus_gamma(ctx3) if is_unitary(v)}
    assert direct == S.enumerate_unitary_in_one_plus_gamma(ctx3).elements


def test_skew_subspace_matches_unitary_logs(ctx7):
    sk = S.skew_subspace_of_gamma(ctx7)
    assert sk.dim == 3
    assert all(ctx7.from_vector(r).b_part.is_zero() for r in sk.basis)


def test_unitary_decompose_examples(ctx3):
    a, b = ctx3.a, ctx3.b
    assert S.unitary_decompose(a * b) == (a, 1, 0)
    assert S.unitary_decompose(a ** 2 * b * 2) == (a ** 2, 1, 1)
    assert S.unitary_decompose(ctx3.one) == (ctx3.one, 0, 0)
    with pytest.raises(ValueError):
        S.unitary_decompose(a + b)


def test_full_algebra_scan(ctx3):
    us, units = S.scan_algebra(ctx3)
    assert len(us) == 12 and units == 324
    decs = {S.unitary_decompose(u) for u in us}
    assert len(decs) == 12
    assert {d.v for d in decs} == {ctx3.one, ctx3.a, ctx3.a ** 2}


def test_scan_bound(ctx5):
    with pytest.raises(BoundExceeded):
        S.scan_algebra(ctx5, bound=10 ** 6)


@pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (7, 2)])
def test_quotient_unitary_units(p, n):
    ctx = AlgebraContext.create(p, n)
    got = S.quotient_unitary_units(ctx)
    assert got == {QuotientElement(ctx, c0, c1) for c0, c1 in [(1, 0), (-1, 0), (0, 1), (0, -1)]}


def test_center_and_centralizer(ctx3, ctx7):
    Z = S.center_of_one_plus_gamma(ctx3)
    assert Z.order == 9
    bf = S.brute_force_group_center(ctx3)
    assert bf == {ctx3.one + ctx3.from_vector(v) for v in
                  (np.array(c) @ Z.subspace.basis % 3 for c in np.ndindex(3, 3))}
    assert S.centralizer_of_a(ctx3).order == 27
    assert S.center_of_one_plus_gamma(ctx7).subspace.dim == 4
    sym = S.closure(symmetric_basis(ctx3)).elements
    line = {ctx3.one + ctx3.reflection_class_sum * c for c in range(3)}
    assert bf == {x * y for x in sym for y in line}


def test_pavesic_examples(ctx3, ctx5):
    assert all(x.is_zero() for x in S.pavesic_factorize(ctx3.one))
    w = omega_prime(ctx3, 1)
    assert tuple(S.pavesic_factorize(ctx3.one + w)) == (w, ctx3.zero, ctx3.zero)
    parts = (omega_prime(ctx5, 1), omega(ctx5, 1) * omega_prime(ctx5, 1), omega(ctx5, 2))
    v = (ctx5.one + parts[0]) * (ctx5.one + parts[1]) * (ctx5.one + parts[2])
    assert tuple(S.pavesic_factorize(v)) == parts
    with pytest.raises(ValueError):
        S.pavesic_factorize(ctx3.b)


CTXS = [AlgebraContext.create(p, n) for p, n in [(3, 1), (5, 1), (7, 1), (5, 2), (7, 2)]]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(CTXS), st.integers(0, 2 ** 32 - 1))
def test_pavesic_round_trip(ctx, seed):
    v = ctx.one + S.random_gamma_element(ctx, np.random.default_rng(seed))
    tr = S.pavesic_factorize(v)
    assert S.factorization_ok(v, tr)


def test_pavesic_unique_on_p3(ctx3):
    L, D, U = ldu_subspaces(ctx3, over="Fp")
    prods = [S.FactorizationTriple(l, d, u).reconstruct() for l in S.elements_of_span(ctx3, L)
             for d in S.elements_of_span(ctx3, D) for u in S.elements_of_span(ctx3, U)]
    assert len(set(prods)) == 81 == len(prods)


@pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (7, 2), (13, 2)])
def test_general_product_accounting(p, n):
    ctx = AlgebraContext.create(p, n)
    acc = S.general_product_accounting(ctx)
    l = ctx.l
    assert (acc.w_dim, acc.c_dim, acc.meet_dim) == (3 * n * l, n * p, n * (l + 1))
    assert acc.meet_is_center and acc.balanced


def test_general_product_exhaustive(ctx3):
    assert S.exhaustive_general_product(ctx3)
    assert S.w_set_is_affine(ctx3, np.random.default_rng(0))
    assert S.d_normalizes_l(ctx3)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(CTXS), st.integers(0, 2 ** 32 - 1))
def test_global_split(ctx, seed):
    u = S.random_unit(ctx, np.random.default_rng(seed))
    assert S.split_holds(u)


def test_split_example(ctx3):
    from fd2p.algebra import psi, theta, invert_unit
    ab = ctx3.a * ctx3.b
    assert theta(ab) == QuotientElement(ctx3, 0, 1)
    assert ab * invert_unit(psi(theta(ab))) == ctx3.a
    assert in_gamma_A(ctx3.a - 1)


def test_handle_order_sources(ctx3):
    z = S.center_of_one_plus_gamma(ctx3)
    assert z.consistent() and z.elements is None
    with pytest.raises(ValueError):
        _ = S.SubgroupHandle("x").order
