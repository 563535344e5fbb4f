"""The group algebra F D_2p and its quotient F C_2.

D_2p = <a, b | a^p = b^2 = 1, b^-1 a b = a^-1>.  The group element a^i b^j
has index ``j*p + i``; an algebra element is a dense vector of 2p field
coefficients, flattened over F_p to length ``2*p*n`` (the coefficient of
a^i b^j occupies positions ``[(j*p+i)*n, (j*p+i+1)*n)``, constant residue
first).  The subalgebra FA is the set of elements with zero b-part.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import ContextError, NotAUnit
from .fields import FieldElement, FieldParams
from .linalg import PrimeField, ext_field, solve
from ._pycore import _alpha_table


class AlgebraContext:
    """Fixes F = F_{p^n} (via its modulus) and the dihedral group D_2p."""

    def __init__(self, field: FieldParams):
        self.field = field
        self.p = field.p
        self.n = field.n
        self.l = (self.p - 1) // 2
        self.G = 2 * self.p
        self.dim = self.G * self.n
        p = self.p
        table = np.zeros((self.G, self.G), dtype=np.int64)
        inv = np.zeros(self.G, dtype=np.int64)
        for g in range(self.G):
            i, j = g % p, g // p
            inv[g] = self.index(-i, 0) if j == 0 else g
            for h in range(self.G):
                k, m = h % p, h // p
                table[g, h] = self.index(i + k if j == 0 else i - k, j + m)
        table.setflags(write=False)
        inv.setflags(write=False)
        self.table = table
        self.inv = inv
        self.f = np.asarray(field.f, dtype=np.int64)
        self.fp = PrimeField(p)

    @classmethod
    def create(cls, p: int, n: int = 1, f: Sequence[int] | None = None) -> "AlgebraContext":
        return cls(FieldParams(p, n, tuple(f) if f else ()))

    def __eq__(self, other):
        return isinstance(other, AlgebraContext) and other.field == self.field

    def __hash__(self):
        return hash(self.field)

    def __repr__(self):
        return f"AlgebraContext(p={self.p}, n={self.n}, f={list(self.field.f)})"

    def index(self, i: int, j: int) -> int:
        return (j % 2) * self.p + i % self.p

    @cached_property
    def alpha_table(self) -> np.ndarray:
        return _alpha_table(self.p, self.n, self.f)

    @cached_property
    def ext(self):
        return ext_field(self.field)

    # -- constructors -----------------------------------------------------

    def from_vector(self, v) -> "AlgebraElement":
        v = np.asarray(v, dtype=np.int64).reshape(-1)
        if v.shape[0] != self.dim:
            raise ContextError(f"expected {self.dim} residues, got {v.shape[0]}")
        return AlgebraElement(self, v % self.p)

    @cached_property
    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, np.zeros(self.dim, dtype=np.int64))

    @cached_property
    def one(self) -> "AlgebraElement":
        return self.group_element(0, 0)

    @cached_property
    def a(self) -> "AlgebraElement":
        return self.group_element(1, 0)

    @cached_property
    def b(self) -> "AlgebraElement":
        return self.group_element(0, 1)

    def group_element(self, i: int, j: int = 0) -> "AlgebraElement":
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.index(i, j) * self.n] = 1
        return AlgebraElement(self, v)

    def a_pow(self, i: int) -> "AlgebraElement":
        return self.group_element(i, 0)

    def scalar(self, c: int | FieldElement) -> "AlgebraElement":
        return self.one * c

    def coerce_field(self, c: int | FieldElement) -> FieldElement:
        if isinstance(c, FieldElement):
            if c.params != self.field:
                raise ContextError("field element from a different field")
            return c
        return self.field.element(int(c))

    def from_coefficients(self, coeffs: Sequence[int | FieldElement]) -> "AlgebraElement":
        """Element with the given 2p field coefficients in index order."""
        if len(coeffs) != self.G:
            raise ContextError(f"expected {self.G} coefficients")
        v = np.zeros(self.dim, dtype=np.int64)
        for g, c in enumerate(coeffs):
            v[g * self.n:(g + 1) * self.n] = self.coerce_field(c).coeffs
        return AlgebraElement(self, v)

    def from_field_vector(self, codes) -> "AlgebraElement":
        codes = np.asarray(codes, dtype=np.int64).reshape(-1)
        if codes.shape[0] != self.G:
            raise ContextError(f"expected {self.G} field codes")
        digits = (codes[:, None] // self.p ** np.arange(self.n)) % self.p
        return AlgebraElement(self, digits.reshape(-1))

    def fa_element(self, coeffs: Sequence[int | FieldElement]) -> "AlgebraElement":
        """sum_i coeffs[i] a^i (an element of FA)."""
        full = list(coeffs) + [0] * (self.G - len(coeffs))
        return self.from_coefficients(full)

    def class_sum(self, i: int) -> "AlgebraElement":
        """Sum of the conjugacy class of a^i: a^i + a^-i (just 1 for i = 0)."""
        if i % self.p == 0:
            return self.one
        return self.a_pow(i) + self.a_pow(-i)

    @cached_property
    def a_hat(self) -> "AlgebraElement":
        """Sum of all elements of A = <a>."""
        return self.fa_element([1] * self.p)

    @cached_property
    def reflection_class_sum(self) -> "AlgebraElement":
        return self.a_hat * self.b

    def deserialize(self, data: Sequence[Sequence[int]]) -> "AlgebraElement":
        if len(data) != self.G or any(len(c) != self.n for c in data):
            raise ContextError("serialized element has the wrong shape")
        return self.from_vector([r for c in data for r in c])

    def elements(self) -> Iterable["AlgebraElement"]:
        total = self.p ** self.dim
        w = self.p ** np.arange(self.dim, dtype=object)
        for code in range(total):
            yield self.from_vector([(code // int(x)) % self.p for x in w])


class AlgebraElement:
    """An immutable element of F D_2p."""

    __slots__ = ("ctx", "v", "_hash")

    def __init__(self, ctx: AlgebraContext, v: np.ndarray):
        v = np.array(v, dtype=np.int64, copy=True)
        v.setflags(write=False)
        self.ctx = ctx
        self.v = v
        self._hash = None

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ctx == other.ctx and np.array_equal(self.v, other.v)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.v.tobytes())
        return self._hash

    def _same(self, other: "AlgebraElement"):
        if other.ctx != self.ctx:
            raise ContextError("elements belong to different algebras")

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self.ctx.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._same(other)
        return AlgebraElement(self.ctx, (self.v + other.v) % self.ctx.p)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.ctx, (-self.v) % self.ctx.p)

    def __sub__(self, other):
        if isinstance(other, (int, FieldElement)):
            other = self.ctx.scalar(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._same(other)
        return AlgebraElement(self.ctx, (self.v - other.v) % self.ctx.p)

    def __rsub__(self, other):
        return (-self) + other

    def _scale(self, c: int | FieldElement) -> "AlgebraElement":
        ctx = self.ctx
        if isinstance(c, int) or ctx.n == 1:
            k = c if isinstance(c, int) else c.coeffs[0]
            if isinstance(c, FieldElement):
                ctx.coerce_field(c)
            return AlgebraElement(ctx, self.v * k % ctx.p)
        c = ctx.coerce_field(c)
        X = self.v.reshape(ctx.G, ctx.n)
        out = np.einsum("gs,t,stu->gu", X, np.asarray(c.coeffs, dtype=np.int64), ctx.alpha_table)
        return AlgebraElement(ctx, out.reshape(-1) % ctx.p)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self._scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._same(other)
        ctx = self.ctx
        return AlgebraElement(ctx, kernels.mul(self.v, other.v, ctx.table, ctx.p, ctx.n, ctx.f))

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self._scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return invert_unit(self) ** (-e)
        result = self.ctx.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- structure ---------------------------------------------------------

    def star(self) -> "AlgebraElement":
        ctx = self.ctx
        X = self.v.reshape(ctx.G, ctx.n)
        return AlgebraElement(ctx, X[ctx.inv].reshape(-1))

    def coeff(self, i: int, j: int = 0) -> FieldElement:
        ctx = self.ctx
        g = ctx.index(i, j)
        return FieldElement(ctx.field, tuple(int(c) for c in self.v[g * ctx.n:(g + 1) * ctx.n]))

    def coefficients(self) -> list[FieldElement]:
        return [self.coeff(g % self.ctx.p, g // self.ctx.p) for g in range(self.ctx.G)]

    @property
    def a_part(self) -> "AlgebraElement":
        half = self.ctx.p * self.ctx.n
        v = self.v.copy()
        v[half:] = 0
        return AlgebraElement(self.ctx, v)

    @property
    def b_part(self) -> "AlgebraElement":
        """y with self = a_part + y b (so y lies in FA)."""
        half = self.ctx.p * self.ctx.n
        v = np.zeros_like(self.v)
        v[:half] = self.v[half:]
        return AlgebraElement(self.ctx, v)

    def is_zero(self) -> bool:
        return not self.v.any()

    def in_fa(self) -> bool:
        return not self.v[self.ctx.p * self.ctx.n:].any()

    def to_vector(self) -> np.ndarray:
        """Length-2pn vector over F_p."""
        return self.v.copy()

    def to_field_vector(self) -> np.ndarray:
        """Length-2p vector of field codes (extension-field coordinates)."""
        ctx = self.ctx
        return self.v.reshape(ctx.G, ctx.n) @ (ctx.p ** np.arange(ctx.n, dtype=np.int64))

    def serialize(self) -> list[list[int]]:
        ctx = self.ctx
        return self.v.reshape(ctx.G, ctx.n).tolist()

    def render(self) -> str:
        ctx = self.ctx
        terms = []
        for g in range(ctx.G):
            c = self.coeff(g % ctx.p, g // ctx.p)
            if c.is_zero():
                continue
            i, j = g % ctx.p, g // ctx.p
            mono = []
            if i:
                mono.append("a" if i == 1 else f"a^{i}")
            if j:
                mono.append("b")
            cs = c.render()
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append("*".join(mono))
            else:
                terms.append("*".join([cs] + mono))
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"<{self.render()}>"


@dataclass(frozen=True)
class QuotientElement:
    """c0 + c1 x in F C_2, C_2 = <x>, tied to the algebra it is a quotient of."""

    ctx: AlgebraContext
    c0: FieldElement
    c1: FieldElement

    def __post_init__(self):
        object.__setattr__(self, "c0", self.ctx.coerce_field(self.c0))
        object.__setattr__(self, "c1", self.ctx.coerce_field(self.c1))

    def __add__(self, other: "QuotientElement"):
        return QuotientElement(self.ctx, self.c0 + other.c0, self.c1 + other.c1)

    def __neg__(self):
        return QuotientElement(self.ctx, -self.c0, -self.c1)

    def __mul__(self, other: "QuotientElement"):
        return QuotientElement(self.ctx, self.c0 * other.c0 + self.c1 * other.c1,
                               self.c0 * other.c1 + self.c1 * other.c0)

    def star(self) -> "QuotientElement":
        return self  # x^-1 = x

    def is_unit(self) -> bool:
        # F C_2 = F x F via x -> +1, x -> -1
        return not (self.c0 + self.c1).is_zero() and not (self.c0 - self.c1).is_zero()

    def inverse(self) -> "QuotientElement":
        if not self.is_unit():
            raise NotAUnit(f"{self.render()} is not a unit of F C_2")
        s = (self.c0 + self.c1).inverse()
        d = (self.c0 - self.c1).inverse()
        half = self.ctx.field.element(2).inverse()
        return QuotientElement(self.ctx, (s + d) * half, (s - d) * half)

    def render(self) -> str:
        parts = []
        if not self.c0.is_zero():
            parts.append(self.c0.render())
        if not self.c1.is_zero():
            c = self.c1.render()
            parts.append("x" if c == "1" else f"{c}*x")
        return " + ".join(parts) if parts else "0"


def quotient_elements(ctx: AlgebraContext) -> Iterable[QuotientElement]:
    for c0 in ctx.field.elements():
        for c1 in ctx.field.elements():
            yield QuotientElement(ctx, c0, c1)


# -- functional API -------------------------------------------------------

def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


def involution(x: AlgebraElement) -> AlgebraElement:
    """sum x_g g  ->  sum x_g g^-1."""
    return x.star()


def augmentation(x: AlgebraElement) -> FieldElement:
    ctx = x.ctx
    s = x.v.reshape(ctx.G, ctx.n).sum(axis=0) % ctx.p
    return ctx.field.element([int(c) for c in s])


def chi(x: AlgebraElement) -> FieldElement:
    """Total coefficient sum; equal to the augmentation on F D_2p."""
    return augmentation(x.a_part) + augmentation(x.b_part)


def theta(x: AlgebraElement) -> QuotientElement:
    """F D_2p -> F C_2, a^i -> 1, a^i b -> x."""
    return QuotientElement(x.ctx, augmentation(x.a_part), augmentation(x.b_part))


def psi(q: QuotientElement) -> AlgebraElement:
    """F C_2 -> F D_2p, c0 + c1 x -> c0 + c1 b (a section of theta)."""
    return q.ctx.scalar(q.c0) + q.ctx.b * q.c1


def in_gamma_A(x: AlgebraElement) -> bool:
    """Membership in the kernel of theta."""
    t = theta(x)
    return t.c0.is_zero() and t.c1.is_zero()


def circle(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x + y + x * y


def left_matrix(x: AlgebraElement) -> np.ndarray:
    ctx = x.ctx
    return kernels.left_matrix(x.v, ctx.table, ctx.p, ctx.n, ctx.f)


def invert_unit(x: AlgebraElement) -> AlgebraElement:
    ctx = x.ctx
    if in_gamma_A(x - 1):
        # 1 + Gamma(A) has exponent p
        return x ** (ctx.p - 1)
    y = solve(left_matrix(x), ctx.one.v, ctx.fp)
    if y is None:
        raise NotAUnit(f"{x.render()} is not a unit")
    inv = AlgebraElement(ctx, y)
    if inv * x != ctx.one:  # pragma: no cover - left inverses are two-sided here
        raise NotAUnit(f"{x.render()} has only a one-sided inverse")
    return inv


def is_unit(x: AlgebraElement) -> bool:
    try:
        invert_unit(x)
    except NotAUnit:
        return False
    return True


def is_unitary(u: AlgebraElement) -> bool:
    # u* u = 1 already forces u to be a unit (finite dimension)
    return u.star() * u == u.ctx.one


def is_symmetric(u: AlgebraElement) -> bool:
    return u.star() == u and is_unit(u)
