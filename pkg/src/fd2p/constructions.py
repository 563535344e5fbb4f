"""Named element families of F D_2p and the L/D/U subspaces of Gamma(A).

Index conventions: omega families use 1 <= i <= l; the u_{i,k} families use
0 <= i <= n-1 and 1 <= k <= p-1, and are listed in lexicographic (k, i)
order.  a^-i is always realised as a^(p-i).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial
from typing import NamedTuple

import numpy as np

from .algebra import AlgebraContext, AlgebraElement, in_gamma_A, invert_unit
from .errors import DomainError
from .linalg import Subspace


def _check_range(name: str, value: int, lo: int, hi: int):
    if not lo <= value <= hi:
        raise ValueError(f"{name}={value} outside [{lo}, {hi}]")


def antisym(ctx: AlgebraContext, j: int) -> AlgebraElement:
    """a^j - a^-j (zero when p | j)."""
    return ctx.a_pow(j) - ctx.a_pow(-j)


def omega_any(ctx: AlgebraContext, j: int, prime: bool = False) -> AlgebraElement:
    """(a^j - a^-j)(1 +- b) for any integer j; omega_0 = 0."""
    side = ctx.one - ctx.b if prime else ctx.one + ctx.b
    return antisym(ctx, j) * side


def omega(ctx: AlgebraContext, i: int) -> AlgebraElement:
    _check_range("i", i, 1, ctx.l)
    return omega_any(ctx, i)


def omega_prime(ctx: AlgebraContext, i: int) -> AlgebraElement:
    _check_range("i", i, 1, ctx.l)
    return omega_any(ctx, i, prime=True)


def a_minus_one_pow(ctx: AlgebraContext, k: int) -> AlgebraElement:
    """(a - 1)^k expanded binomially; exact binomials reduced mod p."""
    p = ctx.p
    coeffs = [0] * p
    for m in range(k + 1):
        coeffs[m % p] += comb(k, m) * (-1) ** (k - m)
    return ctx.fa_element([c % p for c in coeffs])


def u_elem(ctx: AlgebraContext, i: int, k: int) -> AlgebraElement:
    """1 + alpha^i (a - 1)^k."""
    _check_range("i", i, 0, ctx.n - 1)
    _check_range("k", k, 1, ctx.p - 1)
    return ctx.one + a_minus_one_pow(ctx, k) * ctx.field.alpha_pow(i)


def _u_indices(ctx: AlgebraContext, parity: int) -> list[tuple[int, int]]:
    return [(i, k) for k in range(1, ctx.p) if k % 2 == parity for i in range(ctx.n)]


def unitary_basis(ctx: AlgebraContext) -> list[AlgebraElement]:
    """z_{i,k} = u_{i,k}^* u_{i,k}^-1 for odd k."""
    out = []
    for i, k in _u_indices(ctx, 1):
        u = u_elem(ctx, i, k)
        out.append(u.star() * invert_unit(u))
    return out


def symmetric_basis(ctx: AlgebraContext) -> list[AlgebraElement]:
    """s_{i,k} = u_{i,k}^* u_{i,k} for even k."""
    out = []
    for i, k in _u_indices(ctx, 0):
        u = u_elem(ctx, i, k)
        out.append(u.star() * u)
    return out


def center_basis(ctx: AlgebraContext) -> list[AlgebraElement]:
    """Symmetric basis followed by 1 + alpha^i A^ b, 0 <= i < n."""
    ahat_b = ctx.reflection_class_sum
    return symmetric_basis(ctx) + [ctx.one + ahat_b * ctx.field.alpha_pow(i) for i in range(ctx.n)]


def d_block_basis(ctx: AlgebraContext) -> list[AlgebraElement]:
    """1 + alpha^i (a - a^-1)^(2k)(1 -+ b): the (1 - b) family first."""
    out = []
    for side in (ctx.one - ctx.b, ctx.one + ctx.b):
        for k in range(1, ctx.l + 1):
            core = antisym(ctx, 1) ** (2 * k) * side
            for i in range(ctx.n):
                out.append(ctx.one + core * ctx.field.alpha_pow(i))
    return out


def gamma_basis(ctx: AlgebraContext) -> list[AlgebraElement]:
    """omega_i, omega_i', omega_i omega_i', omega_i' omega_i (each 1..l)."""
    w = [omega(ctx, i) for i in range(1, ctx.l + 1)]
    wp = [omega_prime(ctx, i) for i in range(1, ctx.l + 1)]
    return w + wp + [x * y for x, y in zip(w, wp)] + [y * x for x, y in zip(w, wp)]


def augmentation_basis(ctx: AlgebraContext) -> list[AlgebraElement]:
    """(a^i - 1) and (a^i - 1) b for 1 <= i <= p - 1."""
    base = [ctx.a_pow(i) - 1 for i in range(1, ctx.p)]
    return base + [x * ctx.b for x in base]


class IdempotentPair(NamedTuple):
    e1: AlgebraElement
    e2: AlgebraElement


def idempotents(ctx: AlgebraContext) -> IdempotentPair:
    half = ctx.field.element(2).inverse()
    return IdempotentPair((ctx.one + ctx.b) * half, (ctx.one - ctx.b) * half)


def change_of_basis(ctx: AlgebraContext, t: int) -> tuple[list[int], list[int]]:
    """Coordinates of (a^t - 1) and (a^t - 1) b in :func:`gamma_basis`.

    Both coordinate vectors have length 4l and entries in F_p.  Even t is
    written as 2i, odd t as p - 2i; in either case an omega index 2i above l
    is replaced by p - 2i with the sign of the quarter terms flipped.
    """
    p, l = ctx.p, ctx.l
    _check_range("t", t, 1, p - 1)
    quarter = pow(4, p - 2, p)
    eighth = pow(8, p - 2, p)
    if t % 2 == 0:
        i, sign = t // 2, 1
    else:
        i, sign = (p - t) // 2, -1
    j = 2 * i
    if j > l:
        j, sign = p - j, -sign
    plain = [0] * (4 * l)
    twisted = [0] * (4 * l)
    # omega_j, omega_j'
    plain[j - 1] = sign * quarter % p
    plain[l + j - 1] = sign * quarter % p
    twisted[j - 1] = sign * quarter % p
    twisted[l + j - 1] = -sign * quarter % p
    # omega_i omega_i', omega_i' omega_i
    plain[2 * l + i - 1] = eighth
    plain[3 * l + i - 1] = eighth
    twisted[2 * l + i - 1] = -eighth % p
    twisted[3 * l + i - 1] = eighth
    return plain, twisted


def combine(elements: list[AlgebraElement], coeffs) -> AlgebraElement:
    out = elements[0].ctx.zero
    for c, x in zip(coeffs, elements):
        if c:
            out = out + x * c
    return out


# -- spans ----------------------------------------------------------------

def span_fp(ctx: AlgebraContext, elements, scalars: str = "F") -> Subspace:
    """F_p-row space of the elements, closed under F if ``scalars == "F"``.

    With ``scalars="F"`` each element x contributes alpha^s x, 0 <= s < n,
    so the result is the F-span viewed over F_p (dimension n times the
    F-dimension).
    """
    rows = []
    for x in elements:
        if scalars == "F":
            rows.extend((x * ctx.field.alpha_pow(s)).v for s in range(ctx.n))
        else:
            rows.append(x.v)
    return Subspace.span(np.array(rows).reshape(-1, ctx.dim), ctx.fp, ctx.dim)


def span_f(ctx: AlgebraContext, elements) -> Subspace:
    """F-span in extension-field coordinates (ambient dimension 2p)."""
    rows = [x.to_field_vector() for x in elements]
    return Subspace.span(np.array(rows).reshape(-1, ctx.G), ctx.ext, ctx.G)


def elements_of(ctx: AlgebraContext, space: Subspace) -> list[AlgebraElement]:
    if space.field == ctx.fp:
        return [ctx.from_vector(r) for r in space.basis]
    return [ctx.from_field_vector(r) for r in space.basis]


class LDU(NamedTuple):
    L: Subspace
    D: Subspace
    U: Subspace


def ldu_subspaces(ctx: AlgebraContext, over: str = "F") -> LDU:
    """L = sum F omega_i', D = sum F omega_i omega_i' + F omega_i' omega_i,
    U = sum F omega_i.  ``over="F"`` gives extension-field subspaces of F^2p;
    ``over="Fp"`` gives F_p-subspaces of F_p^2pn."""
    w = [omega(ctx, i) for i in range(1, ctx.l + 1)]
    wp = [omega_prime(ctx, i) for i in range(1, ctx.l + 1)]
    d = [x * y for x, y in zip(w, wp)] + [y * x for x, y in zip(w, wp)]
    make = (lambda els: span_f(ctx, els)) if over == "F" else (lambda els: span_fp(ctx, els))
    return LDU(make(wp), make(d), make(w))


def ldu_condition(ctx: AlgebraContext, m: AlgebraElement, part: str) -> bool:
    """The idempotent conditions defining L, D and U for (e1, e2)."""
    e1, e2 = idempotents(ctx)
    if part == "L":
        return e1 * m == e1 * m * e2 and (e2 * m).is_zero()
    if part == "D":
        return e1 * m == e1 * m * e1 and e2 * m == e2 * m * e2
    if part == "U":
        return (e1 * m).is_zero() and e2 * m == e2 * m * e1
    raise ValueError(f"unknown part {part!r}")


# -- truncated exponential / logarithm -------------------------------------

def _nilpotent_powers(x: AlgebraElement) -> list[AlgebraElement]:
    p = x.ctx.p
    pw = [x.ctx.one, x]
    for _ in range(2, p + 1):
        pw.append(pw[-1] * x)
    if not pw[p].is_zero():
        raise DomainError(f"x^{p} != 0 for x = {x.render()}")
    return pw


def truncated_log(v: AlgebraElement) -> AlgebraElement:
    """log(1 + x) = sum_{k<p} (-1)^(k+1) x^k / k, requiring x^p = 0."""
    ctx = v.ctx
    p = ctx.p
    pw = _nilpotent_powers(v - 1)
    out = ctx.zero
    for k in range(1, p):
        c = (-1) ** (k + 1) * pow(k, p - 2, p) % p
        out = out + pw[k] * c
    return out


def truncated_exp(x: AlgebraElement) -> AlgebraElement:
    """exp(x) = sum_{k<p} x^k / k!, requiring x^p = 0."""
    ctx = x.ctx
    p = ctx.p
    pw = _nilpotent_powers(x)
    out = ctx.zero
    for k in range(p):
        out = out + pw[k] * pow(factorial(k) % p, p - 2, p)
    return out


def log_span(ctx: AlgebraContext, elements) -> Subspace:
    """F_p-span of the truncated logs of a commuting family.

    For a commuting family in 1 + N with N^p = 0 the log is a group
    isomorphism onto an F_p-space, so dim of this span = log_p of the order
    of the generated group.
    """
    elements = list(elements)
    for i, x in enumerate(elements):
        for y in elements[i + 1:]:
            if x * y != y * x:
                raise DomainError("log_span needs pairwise commuting elements")
    return span_fp(ctx, [truncated_log(x) for x in elements], scalars="Fp")


@dataclass
class BasisCatalog:
    ctx: AlgebraContext
    families: dict[str, list[tuple[tuple, AlgebraElement]]] = field(default_factory=dict)

    @classmethod
    def build(cls, ctx: AlgebraContext) -> "BasisCatalog":
        l, n = ctx.l, ctx.n
        fam: dict[str, list[tuple[tuple, AlgebraElement]]] = {}
        fam["omega"] = [(("omega", i), omega(ctx, i)) for i in range(1, l + 1)] + [
            (("omega'", i), omega_prime(ctx, i)) for i in range(1, l + 1)]
        fam["unitary"] = list(zip(_u_indices(ctx, 1), unitary_basis(ctx)))
        fam["symmetric"] = list(zip(_u_indices(ctx, 0), symmetric_basis(ctx)))
        fam["center"] = fam["symmetric"] + [
            (("Ahat*b", i), x) for i, x in zip(range(n), center_basis(ctx)[n * l:])]
        dlabels = [(sign, k, i) for sign in ("1-b", "1+b") for k in range(1, l + 1) for i in range(n)]
        fam["d_block"] = list(zip(dlabels, d_block_basis(ctx)))
        glabels = ([("omega", i) for i in range(1, l + 1)] + [("omega'", i) for i in range(1, l + 1)]
                   + [("omega*omega'", i) for i in range(1, l + 1)]
                   + [("omega'*omega", i) for i in range(1, l + 1)])
        fam["gamma"] = list(zip(glabels, gamma_basis(ctx)))
        return cls(ctx, fam)

    def __getitem__(self, name: str) -> list[AlgebraElement]:
        return [x for _, x in self.families[name]]

    def check_membership(self) -> bool:
        """Additive families lie in Gamma(A); multiplicative ones in 1 + Gamma(A)."""
        for name, items in self.families.items():
            shift = 0 if name in ("omega", "gamma") else 1
            if not all(in_gamma_A(x - shift) for _, x in items):
                return False
        return True


FAMILIES = ("omega", "unitary", "symmetric", "center", "d_block", "gamma")
