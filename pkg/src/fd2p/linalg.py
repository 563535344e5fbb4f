"""Exact linear algebra over F_p and F_{p^n}.

Matrices are plain int64 numpy arrays.  Over the prime field entries are
residues; over an extension field entries are element codes
``sum(c_i p^i)`` (see :class:`ExtField`).  Every routine takes the scalar
field as an explicit argument, so the same functions serve both modes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .errors import ContextError
from .fields import FieldParams, prime_factors


class PrimeField:
    kind = "prime"

    def __init__(self, p: int):
        self.p = p
        self.q = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def reduce(self, a):
        return np.asarray(a, dtype=np.int64) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(int(a), self.p - 2, self.p)

    def matmul(self, a, b):
        return (np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)) % self.p


class ExtField:
    """F_{p^n} acting on integer codes through log/antilog tables."""

    kind = "extension"

    def __init__(self, params: FieldParams):
        self.params = params
        self.p = params.p
        self.n = params.n
        self.q = params.q
        q, p, n = self.q, self.p, self.n
        self.weights = p ** np.arange(n, dtype=np.int64)
        codes = np.arange(q, dtype=np.int64)
        self.digits = (codes[:, None] // self.weights) % p
        gen = self._primitive()
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        cur = params.one
        for e in range(q - 1):
            exp[e] = cur.code
            log[cur.code] = e
            cur = cur * gen
        self.exp, self.log = exp, log

    def _primitive(self):
        prm = self.params
        order = prm.q - 1
        factors = prime_factors(order) if order > 1 else []
        for code in range(1, prm.q):
            g = prm.from_code(code)
            if all(g ** (order // r) != prm.one for r in factors):
                return g
        raise AssertionError("no primitive element")  # unreachable

    def __eq__(self, other):
        return isinstance(other, ExtField) and other.params == self.params

    def __hash__(self):
        return hash(("ext", self.params))

    def __repr__(self):
        return f"ExtField({self.p}^{self.n})"

    def reduce(self, a):
        a = np.asarray(a, dtype=np.int64)
        if a.size and (a.min() < 0 or a.max() >= self.q):
            raise ValueError("extension-field codes must lie in [0, q)")
        return a

    def _from_digits(self, d):
        return (d % self.p) @ self.weights

    def add(self, a, b):
        return self._from_digits(self.digits[a] + self.digits[b])

    def sub(self, a, b):
        return self._from_digits(self.digits[a] - self.digits[b])

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.exp[(-self.log[a]) % (self.q - 1)])

    def matmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for k in range(a.shape[1]):
            out = self.add(out, self.mul(a[:, k:k + 1], b[k:k + 1, :]))
        return out


@lru_cache(maxsize=None)
def ext_field(params: FieldParams) -> ExtField:
    return ExtField(params)


def _rref_generic(m: np.ndarray, F) -> list[int]:
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        m[r] = F.mul(m[r], F.inv(int(m[r, c])))
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = F.sub(m[i], F.mul(m[r], m[i, c]))
        pivots.append(c)
        r += 1
    return pivots


def rref(m, F) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form and pivot columns (Gauss-Jordan, exact)."""
    a = np.array(F.reduce(m), dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d matrix")
    a = np.ascontiguousarray(a)
    if a.size == 0:
        return a, []
    if F.kind == "prime":
        piv = kernels.rref_inplace(a, F.p)
    else:
        piv = _rref_generic(a, F)
    return a, piv


def rank(m, F) -> int:
    return len(rref(m, F)[1])


@dataclass(frozen=True, eq=False)
class Subspace:
    """Row space of ``basis`` (kept in reduced row-echelon form)."""

    field: object
    ambient: int
    basis: np.ndarray

    @classmethod
    def span(cls, vectors, F, ambient: int | None = None) -> "Subspace":
        v = np.asarray(vectors, dtype=np.int64)
        if v.size == 0:
            if ambient is None:
                raise ValueError("ambient dimension needed for an empty span")
            return cls(F, ambient, np.zeros((0, ambient), dtype=np.int64))
        v = v.reshape(-1, v.shape[-1])
        if ambient is not None and v.shape[1] != ambient:
            raise ContextError("vector length differs from ambient dimension")
        R, piv = rref(v, F)
        return cls(F, v.shape[1], R[: len(piv)].copy())

    @classmethod
    def zero(cls, F, ambient: int) -> "Subspace":
        return cls(F, ambient, np.zeros((0, ambient), dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def _compat(self, other: "Subspace"):
        if other.ambient != self.ambient or other.field != self.field:
            raise ContextError("subspaces live in different spaces")

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64).reshape(-1)
        if v.shape[0] != self.ambient:
            raise ContextError("vector length differs from ambient dimension")
        if not v.any():
            return True
        return rank(np.vstack([self.basis, v]), self.field) == self.dim

    def contains_space(self, other: "Subspace") -> bool:
        self._compat(other)
        if other.dim == 0:
            return True
        return rank(np.vstack([self.basis, other.basis]), self.field) == self.dim

    def equals(self, other: "Subspace") -> bool:
        self._compat(other)
        return self.dim == other.dim and np.array_equal(self.basis, other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._compat(other)
        return Subspace.span(np.vstack([self.basis, other.basis]), self.field, self.ambient)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._compat(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        F = self.field
        # x = a B1 = c B2  <=>  [B1^T | -B2^T] (a; c) = 0
        neg = F.sub(np.zeros_like(other.basis), other.basis)
        K = kernel(np.hstack([self.basis.T, neg.T]), F)
        if K.dim == 0:
            return Subspace.zero(F, self.ambient)
        coeffs = K.basis[:, : self.dim]
        return Subspace.span(F.matmul(coeffs, self.basis), F, self.ambient)


def subspace_equal(s: Subspace, t: Subspace) -> bool:
    return s.equals(t)


def subspace_member(s: Subspace, v) -> bool:
    if isinstance(v, Subspace):
        return s.contains_space(v)
    return s.contains(v)


def kernel(m, F) -> Subspace:
    """Null space {v : m v = 0} as a Subspace of F^cols."""
    m = np.asarray(m, dtype=np.int64)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return Subspace.span(np.eye(cols, dtype=np.int64), F, cols)
    R, piv = rref(m, F)
    free = [c for c in range(cols) if c not in set(piv)]
    vecs = np.zeros((len(free), cols), dtype=np.int64)
    zero = np.zeros(1, dtype=np.int64)
    for i, fc in enumerate(free):
        vecs[i, fc] = 1
        for r, pc in enumerate(piv):
            vecs[i, pc] = int(F.sub(zero, R[r, fc : fc + 1])[0])
    return Subspace.span(vecs, F, cols)


def solve(m, rhs, F):
    """One solution of m x = rhs (free variables set to 0), or None."""
    m = np.asarray(m, dtype=np.int64)
    rhs = np.asarray(rhs, dtype=np.int64).reshape(-1)
    if rhs.shape[0] != m.shape[0]:
        raise ContextError("right-hand side length differs from row count")
    R, piv = rref(np.hstack([m, rhs[:, None]]), F)
    cols = m.shape[1]
    if piv and piv[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, pc in enumerate(piv):
        x[pc] = R[r, cols]
    return x
