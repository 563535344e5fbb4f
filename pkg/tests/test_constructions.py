import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fd2p.algebra import AlgebraContext, in_gamma_A, is_symmetric, is_unitary
from fd2p.constructions import (FAMILIES, BasisCatalog, a_minus_one_pow, center_basis, change_of_basis,
                                combine, d_block_basis, gamma_basis, idempotents, ldu_condition,
                                ldu_subspaces, log_span, omega, omega_prime, span_f, span_fp,
                                symmetric_basis, truncated_exp, truncated_log, u_elem, unitary_basis)
from fd2p.errors import DomainError
from fd2p.structure import closure, random_gamma_element

GRID = [(p, n) for p in (3, 5, 7, 11, 13) for n in (1, 2)]


def test_p3_examples(ctx3):
    a, b = ctx3.a, ctx3.b
    assert unitary_basis(ctx3) == [a]
    assert symmetric_basis(ctx3) == [a * 2 + a ** 2 * 2]
    assert center_basis(ctx3) == [a * 2 + a ** 2 * 2, ctx3.one + b + a * b + a ** 2 * b]
    assert truncated_log(a) == a * 2 + a ** 2
    assert omega(ctx3, 1) == (a - a ** 2) * (ctx3.one + b)
    assert d_block_basis(ctx3)[0] == ctx3.one + (ctx3.one + a + a ** 2) * (ctx3.one - b)


def test_index_ranges(ctx5):
    for bad in (0, 3):
        with pytest.raises(ValueError):
            omega(ctx5, bad)
        with pytest.raises(ValueError):
            omega_prime(ctx5, bad)
    with pytest.raises(ValueError):
        u_elem(ctx5, 1, 1)
    with pytest.raises(ValueError):
        u_elem(ctx5, 0, 5)


def test_a_minus_one_power_is_repeated_product(ctx7):
    x = ctx7.a - 1
    for k in range(1, 7):
        assert a_minus_one_pow(ctx7, k) == x ** k
    assert (x ** 7).is_zero()


@pytest.mark.parametrize("p,n", GRID)
def test_basis_shapes_and_log_ranks(p, n):
    ctx = AlgebraContext.create(p, n)
    l = ctx.l
    U, S, Z, D = unitary_basis(ctx), symmetric_basis(ctx), center_basis(ctx), d_block_basis(ctx)
    assert (len(U), len(S), len(Z), len(D)) == (n * l, n * l, n * (l + 1), 2 * n * l)
    assert all(is_unitary(z) and z.in_fa() for z in U)
    assert all(is_symmetric(s) for s in S)
    assert log_span(ctx, U).dim == n * l
    assert log_span(ctx, S).dim == n * l
    assert log_span(ctx, Z).dim == n * (l + 1)
    assert span_f(ctx, gamma_basis(ctx)).dim == 4 * l
    assert span_fp(ctx, gamma_basis(ctx)).dim == 4 * n * l
    assert tuple(s.dim for s in ldu_subspaces(ctx)) == (l, 2 * l, l)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_change_of_basis_reconstructs(p):
    ctx = AlgebraContext.create(p)
    gb = gamma_basis(ctx)
    for t in range(1, p):
        plain, twisted = change_of_basis(ctx, t)
        assert len(plain) == len(twisted) == 4 * ctx.l
        assert combine(gb, plain) == ctx.a_pow(t) - 1
        assert combine(gb, twisted) == (ctx.a_pow(t) - 1) * ctx.b


def test_idempotents(ctx5):
    e1, e2 = idempotents(ctx5)
    assert e1 * e1 == e1 and e2 * e2 == e2
    assert (e1 * e2).is_zero() and e1 + e2 == ctx5.one


def test_ldu_conditions_match_spans(ctx5):
    L, D, U = ldu_subspaces(ctx5, over="Fp")
    for name, space in zip("LDU", (L, D, U)):
        for row in space.basis:
            m = ctx5.from_vector(row)
            assert ldu_condition(ctx5, m, name)
            others = [o for o in "LDU" if o != name]
            assert not any(ldu_condition(ctx5, m, o) for o in others)
    with pytest.raises(ValueError):
        ldu_condition(ctx5, ctx5.zero, "X")


CTXS = [AlgebraContext.create(p, n) for p, n in [(3, 1), (5, 1), (7, 1), (3, 2)]]


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(CTXS), st.integers(0, 2 ** 32 - 1))
def test_log_exp_inverse_on_one_plus_gamma(ctx, seed):
    rng = np.random.default_rng(seed)
    x = random_gamma_element(ctx, rng)
    v = ctx.one + x
    assert truncated_exp(truncated_log(v)) == v
    assert truncated_log(truncated_exp(x)) == x
    assert in_gamma_A(truncated_log(v))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(CTXS[:3]), st.integers(0, 2 ** 32 - 1))
def test_log_is_a_homomorphism_on_fa(ctx, seed):
    rng = np.random.default_rng(seed)
    u = ctx.fa_element(list(rng.integers(0, ctx.p, ctx.p)))
    u = u - ctx.scalar(int(sum(u.v) % ctx.p)) + 1  # force augmentation 1
    w = ctx.fa_element(list(rng.integers(0, ctx.p, ctx.p)))
    w = w - ctx.scalar(int(sum(w.v) % ctx.p)) + 1
    assert truncated_log(u * w) == truncated_log(u) + truncated_log(w)


def test_log_domain_errors(ctx3):
    with pytest.raises(DomainError):
        truncated_log(ctx3.b)  # b - 1 is not nilpotent
    with pytest.raises(DomainError):
        log_span(ctx3, [ctx3.a, ctx3.one + omega(ctx3, 1)])


def test_log_rank_equals_closure_order(ctx5):
    for gens in (unitary_basis(ctx5), symmetric_basis(ctx5), center_basis(ctx5)):
        assert closure(gens).order == 5 ** log_span(ctx5, gens).dim


def test_catalog(ctx5):
    cat = BasisCatalog.build(ctx5)
    assert set(cat.families) == set(FAMILIES)
    assert cat.check_membership()
    assert len(cat["gamma"]) == 8 and len(cat["center"]) == 3
