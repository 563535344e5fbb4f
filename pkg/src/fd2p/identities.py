"""Explicit omega-identities, each returned as (label, lhs, rhs) triples.

Callers decide how to report them; ``all(lhs == rhs ...)`` is the check.
Indices above l are allowed on the right-hand sides through
:func:`omega_any` (omega_0 = 0), exactly as the closed forms are written.
"""
from __future__ import annotations

from math import comb

from .algebra import AlgebraContext, AlgebraElement
from .constructions import antisym, change_of_basis, combine, gamma_basis, omega_any

Identity = tuple[str, AlgebraElement, AlgebraElement]


def _w(ctx, j):
    return omega_any(ctx, j)


def _wp(ctx, j):
    return omega_any(ctx, j, prime=True)


def product_identities(ctx: AlgebraContext) -> list[Identity]:
    """omega_i omega_j = 0, omega_i' omega_j' = 0, and the closed forms of
    omega_i omega_i' and omega_i' omega_i."""
    l = ctx.l
    out: list[Identity] = []
    zero = ctx.zero
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            out.append((f"w{i}*w{j}=0", _w(ctx, i) * _w(ctx, j), zero))
            out.append((f"w'{i}*w'{j}=0", _wp(ctx, i) * _wp(ctx, j), zero))
        sym = ctx.a_pow(2 * i) + ctx.a_pow(-2 * i) - 2
        out.append((f"w{i}*w'{i}", _w(ctx, i) * _wp(ctx, i), sym * (ctx.one - ctx.b) * 2))
        out.append((f"w'{i}*w{i}", _wp(ctx, i) * _w(ctx, i), sym * (ctx.one + ctx.b) * 2))
    return out


def change_of_basis_identities(ctx: AlgebraContext) -> list[Identity]:
    gb = gamma_basis(ctx)
    out: list[Identity] = []
    for t in range(1, ctx.p):
        plain, twisted = change_of_basis(ctx, t)
        lhs = ctx.a_pow(t) - 1
        out.append((f"a^{t}-1", lhs, combine(gb, plain)))
        out.append((f"(a^{t}-1)b", lhs * ctx.b, combine(gb, twisted)))
    return out


def center_proof_identities(ctx: AlgebraContext) -> list[Identity]:
    """The omega_1-products used to cut down the centralizer of Gamma(A)."""
    l = ctx.l
    out: list[Identity] = []
    w1, wp1 = _w(ctx, 1), _wp(ctx, 1)
    ww = lambda j: _w(ctx, j) * _wp(ctx, j)
    wpw = lambda j: _wp(ctx, j) * _w(ctx, j)
    for i in range(1, l + 1):
        if i % 2:
            k = (i - 1) // 2
            out.append((f"w1*w'{i} (odd)", w1 * _wp(ctx, i), ww(k + 1) - ww(k)))
            out.append((f"w'{i}*w1 (odd)", _wp(ctx, i) * w1, wpw(k + 1) - wpw(k)))
        else:
            k = i // 2
            out.append((f"w1*w'{i} (even)", w1 * _wp(ctx, i), ww(l - k) - ww(l - (k - 1))))
            out.append((f"w'{i}*w1 (even)", _wp(ctx, i) * w1, wpw(l - k) - wpw(l - (k - 1))))

    def triple(j):
        return w1 * _wp(ctx, j) * _w(ctx, j)

    if l % 2:
        low, mid, high = range(1, (l - 1) // 2 + 1), (l + 1) // 2, range((l + 3) // 2, l)
    else:
        low, mid, high = range(1, (l - 2) // 2 + 1), l // 2, range((l + 2) // 2, l)
    for j in low:
        out.append((f"w1*w'{j}*w{j} (low)", triple(j), _w(ctx, 2 * j + 1) * 4 - _w(ctx, 2 * j - 1) * 4 - w1 * 8))
    for j in high:
        out.append((f"w1*w'{j}*w{j} (high)", triple(j),
                    _w(ctx, 2 * l - 2 * j + 2) * 4 - _w(ctx, 2 * l - 2 * j) * 4 - w1 * 8))
    out.append((f"w1*w'{mid}*w{mid} (mid)", triple(mid), -(_w(ctx, l - 1) * 4) - _w(ctx, l) * 4 - w1 * 8))
    out.append((f"w1*w'{l}*w{l} (last)", triple(l), _w(ctx, 2) * 4 - w1 * 8))
    return out


def d_block_identities(ctx: AlgebraContext) -> list[Identity]:
    """(a - a^-1)^(2k)(1 - b) = sum_{j<k} (-1)^j C(2k, j)/2 omega_{k-j} omega_{k-j}'."""
    p = ctx.p
    half = pow(2, p - 2, p)
    out: list[Identity] = []
    for k in range(1, ctx.l + 1):
        lhs = antisym(ctx, 1) ** (2 * k) * (ctx.one - ctx.b)
        rhs = ctx.zero
        for j in range(k):
            c = (-1) ** j * comb(2 * k, j) * half % p
            rhs = rhs + _w(ctx, k - j) * _wp(ctx, k - j) * c
        out.append((f"(a-a^-1)^{2 * k}(1-b)", lhs, rhs))
        lhs_plus = antisym(ctx, 1) ** (2 * k) * (ctx.one + ctx.b)
        rhs_plus = ctx.zero
        for j in range(k):
            c = (-1) ** j * comb(2 * k, j) * half % p
            rhs_plus = rhs_plus + _wp(ctx, k - j) * _w(ctx, k - j) * c
        out.append((f"(a-a^-1)^{2 * k}(1+b)", lhs_plus, rhs_plus))
    return out


def all_identities(ctx: AlgebraContext) -> dict[str, list[Identity]]:
    return {
        "products": product_identities(ctx),
        "change_of_basis": change_of_basis_identities(ctx),
        "center_proof": center_proof_identities(ctx),
        "d_block": d_block_identities(ctx),
    }


def failures(identities: list[Identity]) -> list[str]:
    return [label for label, lhs, rhs in identities if lhs != rhs]
