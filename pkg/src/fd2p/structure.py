"""Group-level computations inside U(F D_2p).

Most subgroups handled here are of the form 1 + N for an F_p-subspace N of
Gamma(A); those carry ``subspace`` and their order is p^dim N.  Brute force
is only attempted below explicit size bounds.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from . import kernels
from .algebra import (AlgebraContext, AlgebraElement, QuotientElement, in_gamma_A, invert_unit,
                      is_unitary, quotient_elements, theta)
from .constructions import (augmentation_basis, center_basis, elements_of, gamma_basis, idempotents,
                            ldu_subspaces, log_span, span_fp, unitary_basis)
from .errors import BoundExceeded, DomainError
from .linalg import Subspace, kernel

GROUP_BOUND = 10 ** 6
ALGEBRA_BOUND = 10 ** 7


class VerificationError(AssertionError):
    """A computed object disagrees with the structure it was built to have."""


@dataclass
class SubgroupHandle:
    label: str
    generators: list[AlgebraElement] = field(default_factory=list)
    elements: frozenset | None = None
    predicted_order: int | None = None
    subspace: Subspace | None = None  # the group equals 1 + subspace as a set

    @property
    def order(self) -> int:
        if self.elements is not None:
            return len(self.elements)
        if self.subspace is not None:
            return self.subspace.field.p ** self.subspace.dim
        if self.predicted_order is None:
            raise ValueError(f"order of {self.label} unknown")
        return self.predicted_order

    def consistent(self) -> bool:
        if self.predicted_order is None:
            return True
        return self.order == self.predicted_order


def right_matrix(g: AlgebraElement) -> np.ndarray:
    """R with x * g == x.v @ R (mod p), row j being e_j * g."""
    ctx = g.ctx
    eye = np.eye(ctx.dim, dtype=np.int64)
    return np.array([(ctx.from_vector(e) * g).v for e in eye])


def closure(generators: Iterable[AlgebraElement], order_bound: int = GROUP_BOUND,
            label: str = "") -> SubgroupHandle:
    """Breadth-first product closure of a set of units.

    Right multiplication by a generator is linear, so each BFS layer is
    advanced with one matrix product per generator.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("closure needs at least one generator")
    ctx = gens[0].ctx
    p = ctx.p
    mats = [right_matrix(g) for g in gens]
    start = ctx.one.v.astype(np.int64)
    seen = {start.tobytes()}
    rows = [start]
    frontier = start[None, :]
    while len(frontier):
        fresh = []
        for R in mats:
            for row in (frontier @ R) % p:
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    fresh.append(row)
                    if len(seen) > order_bound:
                        raise BoundExceeded(f"closure of {label or 'group'} exceeds {order_bound}", len(seen))
        rows.extend(fresh)
        frontier = np.array(fresh, dtype=np.int64).reshape(-1, ctx.dim)
    return SubgroupHandle(label, gens, frozenset(ctx.from_vector(r) for r in rows))


# -- Gamma(A) coordinates -------------------------------------------------

def gamma_fp_basis(ctx: AlgebraContext) -> np.ndarray:
    """An F_p-basis of Gamma(A) as rows (4nl x 2pn)."""
    return span_fp(ctx, augmentation_basis(ctx)).basis


def one_plus_gamma_size(ctx: AlgebraContext) -> int:
    return ctx.p ** (4 * ctx.n * ctx.l)


def iter_one_plus_gamma(ctx: AlgebraContext, bound: int = GROUP_BOUND) -> Iterable[AlgebraElement]:
    size = one_plus_gamma_size(ctx)
    if size > bound:
        raise BoundExceeded(f"|1 + Gamma(A)| = {size} exceeds bound {bound}", size)
    B = gamma_fp_basis(ctx)
    k = B.shape[0]
    for code in range(size):
        digits = [(code // ctx.p ** j) % ctx.p for j in range(k)]
        yield ctx.from_vector(ctx.one.v + np.asarray(digits, dtype=np.int64) @ B)


def _decode(ctx: AlgebraContext, base: np.ndarray, gens: np.ndarray, code: int) -> AlgebraElement:
    k = gens.shape[0]
    digits = np.array([(code // ctx.p ** j) % ctx.p for j in range(k)], dtype=np.int64)
    return ctx.from_vector(base + digits @ gens)


def random_gamma_element(ctx: AlgebraContext, rng: np.random.Generator) -> AlgebraElement:
    B = gamma_fp_basis(ctx)
    return ctx.from_vector(rng.integers(0, ctx.p, B.shape[0]) @ B)


# -- unitary units ----------------------------------------------------------

def enumerate_unitary_in_one_plus_gamma(ctx: AlgebraContext, bound: int = GROUP_BOUND) -> SubgroupHandle:
    """All unitary units of 1 + Gamma(A) by exhaustive scan.

    Raises :class:`VerificationError` if the set differs from the group
    generated by the unitary basis.
    """
    size = one_plus_gamma_size(ctx)
    if size > bound:
        raise BoundExceeded(f"|1 + Gamma(A)| = {size} exceeds bound {bound}", size)
    B = gamma_fp_basis(ctx)
    codes, _ = kernels.scan(ctx.one.v, B, ctx.table, ctx.inv, ctx.p, ctx.n, ctx.f, False)
    found = frozenset(_decode(ctx, ctx.one.v, B, c) for c in codes)
    gen = closure(unitary_basis(ctx), bound, "V_*(FA)")
    if found != gen.elements:
        raise VerificationError("unitary units of 1 + Gamma(A) differ from <z_ik>")
    return SubgroupHandle("V_*(FA)", gen.generators, found, ctx.p ** (ctx.n * ctx.l))


def scan_algebra(ctx: AlgebraContext, bound: int = ALGEBRA_BOUND, count_units: bool = True):
    """Exhaustive pass over F D_2p: (unitary units, number of units)."""
    size = ctx.p ** ctx.dim
    if size > bound:
        raise BoundExceeded(f"|F D_2p| = {size} exceeds bound {bound}", size)
    eye = np.eye(ctx.dim, dtype=np.int64)
    codes, units = kernels.scan(ctx.zero.v, eye, ctx.table, ctx.inv, ctx.p, ctx.n, ctx.f, count_units)
    return [_decode(ctx, ctx.zero.v, eye, c) for c in codes], units


class UnitaryDecomposition(NamedTuple):
    v: AlgebraElement
    eps: int
    delta: int


def unitary_decompose(u: AlgebraElement) -> UnitaryDecomposition:
    """u = v b^eps (-1)^delta with v unitary in FA."""
    ctx = u.ctx
    if not is_unitary(u):
        raise ValueError(f"{u.render()} is not unitary")
    t = theta(u)
    one, zero = ctx.field.one, ctx.field.zero
    if t.c1 == zero and t.c0 in (one, -one):
        eps, delta = 0, int(t.c0 != one)
    elif t.c0 == zero and t.c1 in (one, -one):
        eps, delta = 1, int(t.c1 != one)
    else:
        raise VerificationError(f"theta of a unitary unit is {t.render()}, not in {{+-1, +-x}}")
    v = u * ctx.b ** eps * (-1) ** delta
    if not v.in_fa() or not is_unitary(v):
        raise VerificationError("unitary part is not a unitary element of FA")
    return UnitaryDecomposition(v, eps, delta)


def quotient_unitary_units(ctx: AlgebraContext, bound: int = GROUP_BOUND) -> set[QuotientElement]:
    """Brute force over F C_2: all q with q* q = 1."""
    size = ctx.p ** (2 * ctx.n)
    if size > bound:
        raise BoundExceeded(f"|F C_2| = {size} exceeds bound {bound}", size)
    one = QuotientElement(ctx, 1, 0)
    return {q for q in quotient_elements(ctx) if q.star() * q == one}


def skew_subspace_of_gamma(ctx: AlgebraContext) -> Subspace:
    """{x in Gamma(A) : x* = -x} over F_p."""
    B = gamma_fp_basis(ctx)
    cols = [(ctx.from_vector(r) + ctx.from_vector(r).star()).v for r in B]
    K = kernel(np.array(cols).T, ctx.fp)
    return Subspace.span(ctx.fp.matmul(K.basis, B), ctx.fp, ctx.dim) if K.dim else Subspace.zero(ctx.fp, ctx.dim)


# -- centralizers -----------------------------------------------------------

def _centralizer_in_gamma(ctx: AlgebraContext, others: list[AlgebraElement]) -> Subspace:
    B = gamma_fp_basis(ctx)
    blocks = []
    for w in others:
        cols = []
        for r in B:
            x = ctx.from_vector(r)
            cols.append((x * w - w * x).v)
        blocks.append(np.array(cols).T)
    K = kernel(np.vstack(blocks), ctx.fp)
    if K.dim == 0:
        return Subspace.zero(ctx.fp, ctx.dim)
    return Subspace.span(ctx.fp.matmul(K.basis, B), ctx.fp, ctx.dim)


def center_shape_subspace(ctx: AlgebraContext) -> Subspace:
    """F-span of C_i^ - 2 (1 <= i <= l) and A^ b, over F_p."""
    shape = [ctx.class_sum(i) - 2 for i in range(1, ctx.l + 1)] + [ctx.reflection_class_sum]
    return span_fp(ctx, shape)


def center_of_one_plus_gamma(ctx: AlgebraContext) -> SubgroupHandle:
    """Z(1 + Gamma(A)) = 1 + {x in Gamma(A) : x w = w x for all w in Gamma(A)}."""
    Z = _centralizer_in_gamma(ctx, gamma_basis(ctx))
    n, l = ctx.n, ctx.l
    if Z.dim != n * (l + 1):
        raise VerificationError(f"centralizer of Gamma(A) has F_p-dimension {Z.dim}, expected {n * (l + 1)}")
    if not Z.equals(center_shape_subspace(ctx)):
        raise VerificationError("center is not spanned by C_i^ - 2 and A^ b")
    gens = center_basis(ctx)
    if not log_span(ctx, gens).equals(Z):
        raise VerificationError("center basis does not generate the center")
    return SubgroupHandle("Z(1+Gamma(A))", gens, None, ctx.p ** (n * (l + 1)), Z)


def centralizer_of_a(ctx: AlgebraContext) -> SubgroupHandle:
    """C(a) in 1 + Gamma(A); checked to be V_*(FA) x Z(1 + Gamma(A))."""
    C = _centralizer_in_gamma(ctx, [ctx.a])
    n, p = ctx.n, ctx.p
    if C.dim != n * p:
        raise VerificationError(f"centralizer of a has F_p-dimension {C.dim}, expected {n * p}")
    V = log_span(ctx, unitary_basis(ctx))
    Zl = log_span(ctx, center_basis(ctx))
    if V.intersect(Zl).dim != 0 or not (V + Zl).equals(C):
        raise VerificationError("C(a) is not the direct product V_*(FA) x Z")
    return SubgroupHandle("C(a)", unitary_basis(ctx) + center_basis(ctx), None, p ** (n * p), C)


def brute_force_group_center(ctx: AlgebraContext, bound: int = 10 ** 4) -> frozenset:
    """Pairwise commutation over all of 1 + Gamma(A) (|G|^2 products)."""
    size = one_plus_gamma_size(ctx)
    if size > bound:
        raise BoundExceeded(f"|1 + Gamma(A)| = {size} exceeds pairwise bound {bound}", size)
    group = list(iter_one_plus_gamma(ctx, bound))
    return frozenset(x for x in group if all(x * y == y * x for y in group))


# -- Pavesic factorization --------------------------------------------------

class FactorizationTriple(NamedTuple):
    l_part: AlgebraElement
    d_part: AlgebraElement
    u_part: AlgebraElement

    def reconstruct(self) -> AlgebraElement:
        one = self.l_part.ctx.one
        return (one + self.l_part) * (one + self.d_part) * (one + self.u_part)


def _corner_inverse(e: AlgebraElement, m: AlgebraElement) -> AlgebraElement:
    """Inverse of e + m in the corner e R e for nilpotent m = e m e."""
    out, term, sign = e, m, -1
    for _ in range(e.ctx.p):
        if term.is_zero():
            return out
        out = out + term * sign
        term, sign = term * m, -sign
    if not term.is_zero():
        raise DomainError("corner element is not nilpotent")
    return out


def pavesic_factorize(v: AlgebraElement) -> FactorizationTriple:
    """Split v in 1 + Gamma(A) as (1 + l)(1 + d)(1 + u), l in L, d in D, u in U.

    In the Peirce picture for (e1, e2), v = [[e1 + m11, m12], [m21, e2 + m22]]
    and the factors are block upper-unitriangular, block diagonal and block
    lower-unitriangular.
    """
    ctx = v.ctx
    m = v - 1
    if not in_gamma_A(m):
        raise ValueError(f"{v.render()} is not in 1 + Gamma(A)")
    e1, e2 = idempotents(ctx)
    m11, m12 = e1 * m * e1, e1 * m * e2
    m21, m22 = e2 * m * e1, e2 * m * e2
    d2_inv = _corner_inverse(e2, m22)
    u_part = d2_inv * m21
    l_part = m12 * d2_inv
    d_part = (m11 - m12 * d2_inv * m21) + m22
    return FactorizationTriple(l_part, d_part, u_part)


def factorization_ok(v: AlgebraElement, tr: FactorizationTriple, ldu=None) -> bool:
    ctx = v.ctx
    L, D, U = ldu if ldu is not None else ldu_subspaces(ctx, over="Fp")
    return (tr.reconstruct() == v and L.contains(tr.l_part.v) and D.contains(tr.d_part.v)
            and U.contains(tr.u_part.v))


# -- general product --------------------------------------------------------

@dataclass
class ProductAccounting:
    """Exponents (over F_p) in |W| |C(a)| / |W n C(a)| = |1 + Gamma(A)|."""

    w_dim: int
    c_dim: int
    meet_dim: int
    z_dim: int
    total_dim: int
    meet_is_center: bool

    @property
    def balanced(self) -> bool:
        return self.w_dim + self.c_dim - self.meet_dim == self.total_dim


def general_product_accounting(ctx: AlgebraContext) -> ProductAccounting:
    """W = (1 + L)(1 + D) equals 1 + (L + D) as a set, so every quantity is
    a subspace dimension."""
    L, D, _ = ldu_subspaces(ctx, over="Fp")
    if L.intersect(D).dim:
        raise VerificationError("L and D intersect")
    W = L + D
    C = centralizer_of_a(ctx).subspace
    Z = center_of_one_plus_gamma(ctx).subspace
    meet = W.intersect(C)
    return ProductAccounting(W.dim, C.dim, meet.dim, Z.dim, 4 * ctx.n * ctx.l, meet.equals(Z))


def w_set_is_affine(ctx: AlgebraContext, rng: np.random.Generator, samples: int = 64) -> bool:
    """(1 + l)(1 + d) - 1 lies in L + D for sampled l, d, and each such
    element is reached (l recovered as x_L (e2 + d_22)^-1)."""
    L, D, _ = ldu_subspaces(ctx, over="Fp")
    LD = L + D
    Le, De = elements_of(ctx, L), elements_of(ctx, D)
    for _ in range(samples):
        lx = sum((x * int(c) for x, c in zip(Le, rng.integers(0, ctx.p, len(Le)))), ctx.zero)
        dx = sum((x * int(c) for x, c in zip(De, rng.integers(0, ctx.p, len(De)))), ctx.zero)
        w = (ctx.one + lx) * (ctx.one + dx)
        if not LD.contains((w - 1).v):
            return False
        tr = pavesic_factorize(w)
        if tr.l_part != lx or tr.d_part != dx or not tr.u_part.is_zero():
            return False
    return True


def exhaustive_general_product(ctx: AlgebraContext, bound: int = 10 ** 4) -> bool:
    """Every element of 1 + Gamma(A) is w c with w in W, c in C(a)."""
    size = one_plus_gamma_size(ctx)
    if size > bound:
        raise BoundExceeded(f"|1 + Gamma(A)| = {size} exceeds bound {bound}", size)
    L, D, _ = ldu_subspaces(ctx, over="Fp")
    W = closure([ctx.one + x for x in elements_of(ctx, L) + elements_of(ctx, D)], bound, "W")
    C = closure([ctx.one + x for x in elements_of(ctx, centralizer_of_a(ctx).subspace)], bound, "C(a)")
    products = {w * c for w in W.elements for c in C.elements}
    return products == set(iter_one_plus_gamma(ctx, bound))


def d_normalizes_l(ctx: AlgebraContext) -> bool:
    from .constructions import d_block_basis
    L, _, _ = ldu_subspaces(ctx, over="Fp")
    Ls = elements_of(ctx, L)
    for d in d_block_basis(ctx):
        d_inv = invert_unit(d)
        for x in Ls:
            if not L.contains((d * (ctx.one + x) * d_inv - 1).v):
                return False
    return True


# -- the global split U = (1 + Gamma(A)) x| (F* x F*) --------------------------

def random_unit(ctx: AlgebraContext, rng: np.random.Generator, max_tries: int = 1000) -> AlgebraElement:
    for _ in range(max_tries):
        x = ctx.from_vector(rng.integers(0, ctx.p, ctx.dim))
        try:
            invert_unit(x)
        except Exception:
            continue
        return x
    raise RuntimeError("no unit found by rejection sampling")


def split_holds(u: AlgebraElement) -> bool:
    from .algebra import psi
    t = theta(u)
    if not t.is_unit():
        return False
    if theta(psi(t)) != t:
        return False
    return in_gamma_A(u * invert_unit(psi(t)) - 1)


def elements_of_span(ctx: AlgebraContext, space: Subspace) -> list[AlgebraElement]:
    """Every element of an F_p-subspace (p^dim of them)."""
    B = space.basis
    k = B.shape[0]
    if k == 0:
        return [ctx.zero]
    grid = np.stack(np.meshgrid(*[np.arange(ctx.p)] * k, indexing="ij"), -1).reshape(-1, k)
    return [ctx.from_vector(row) for row in grid @ B]
