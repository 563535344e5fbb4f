"""Prime fields F_p and extensions F_{p^n} = F_p[x]/(f).

Polynomials are coefficient sequences with the constant term first.  A field
element is stored the same way (length n, reduced mod p), and also has an
integer code ``sum(c_i * p**i)`` used for enumeration and table lookups.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterator, Sequence

from .errors import ConfigError, ContextError


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


# -- polynomial helpers over F_p (lists, constant term first) ---------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    m = _trim([c % p for c in m])
    if not m:
        raise ZeroDivisionError("polynomial modulus is zero")
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def poly_mulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly_mod(out, m, p)


def poly_powmod(a: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = poly_mod(a, m, p)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, m, p)
        base = poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _has_root(f: Sequence[int], p: int) -> bool:
    for x in range(p):
        acc = 0
        for c in reversed(f):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic f over F_p.

    Degrees 2 and 3 use root search; higher degrees use Rabin's test
    (x^(p^n) = x mod f, and gcd(x^(p^(n/r)) - x, f) = 1 for primes r | n).
    """
    f = [c % p for c in f]
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        return False
    if n == 1:
        return True
    if n <= 3:
        return not _has_root(f, p)
    x = [0, 1]
    for r in prime_factors(n):
        h = poly_powmod(x, p ** (n // r), f, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(poly_gcd(f, diff, p)) != 1:
            return False
    h = poly_powmod(x, p ** n, f, p)
    return poly_mod([c for c in h], f, p) == [0, 1]


def find_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree n over F_p.

    Candidates are scanned in increasing order of the code sum(c_i p^i) of
    their non-leading coefficients, so (5, 2) gives x^2 + 2, not x^2 + x + 1.
    """
    if not is_prime(p):
        raise ConfigError(f"p = {p} is not prime")
    if n < 1:
        raise ConfigError("extension degree n must be >= 1")
    for code in range(p ** n):
        low = [(code // p ** i) % p for i in range(n)]
        cand = tuple(low) + (1,)
        if is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")  # unreachable


def parse_poly(text: str) -> tuple[int, ...]:
    """Parse the ``--poly`` format: ``1,0,1`` is x^2 + 1."""
    try:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise ConfigError(f"bad polynomial {text!r}: {exc}") from None


@dataclass(frozen=True)
class FieldParams:
    """The field F_{p^n} = F_p[x]/(f); ``f`` includes its leading 1."""

    p: int
    n: int
    f: tuple[int, ...] = field(default=())

    def __post_init__(self):
        p, n = self.p, self.n
        if not isinstance(p, int) or p <= 2 or not is_prime(p):
            raise ConfigError(f"characteristic p > 2 must be an odd prime (got p={p})")
        if not isinstance(n, int) or n < 1:
            raise ConfigError(f"extension degree n must be >= 1 (got n={n})")
        f = tuple(self.f) if self.f else find_irreducible(p, n)
        if len(f) != n + 1 or any(not 0 <= c < p for c in f) or f[-1] != 1:
            raise ConfigError(f"polynomial {f} is not monic of degree {n} with residues mod {p}")
        if not is_irreducible(f, p):
            raise ConfigError(f"polynomial {f} is reducible over F_{p}")
        object.__setattr__(self, "f", f)

    @property
    def q(self) -> int:
        return self.p ** self.n

    def element(self, coeffs: Sequence[int] | int) -> "FieldElement":
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        c = [x % self.p for x in coeffs]
        if len(c) > self.n:
            c = poly_mod(c, self.f, self.p)
        c = c + [0] * (self.n - len(c))
        return FieldElement(self, tuple(c))

    def from_code(self, code: int) -> "FieldElement":
        return FieldElement(self, tuple((code // self.p ** i) % self.p for i in range(self.n)))

    @cached_property
    def zero(self) -> "FieldElement":
        return self.element(0)

    @cached_property
    def one(self) -> "FieldElement":
        return self.element(1)

    @cached_property
    def alpha(self) -> "FieldElement":
        """Residue class of x modulo f."""
        return self.element([0, 1])

    def alpha_pow(self, i: int) -> "FieldElement":
        return self.alpha ** i

    def elements(self) -> Iterator["FieldElement"]:
        for digits in product(range(self.p), repeat=self.n):
            yield FieldElement(self, tuple(reversed(digits)))


@dataclass(frozen=True)
class FieldElement:
    params: FieldParams
    coeffs: tuple[int, ...]

    def _check(self, other) -> "FieldElement":
        if isinstance(other, int):
            return self.params.element(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.params != self.params:
            raise ContextError("field elements belong to different fields")
        return other

    @property
    def code(self) -> int:
        return sum(c * self.params.p ** i for i, c in enumerate(self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.params.p
        return FieldElement(self.params, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.params.p
        return FieldElement(self.params, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        prm = self.params
        return prm.element(poly_mulmod(self.coeffs, other.coeffs, prm.f, prm.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        prm = self.params
        return prm.element(poly_powmod(self.coeffs, e, prm.f, prm.p))

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in F_%d^%d" % (self.params.p, self.params.n))
        return self ** (self.params.q - 2)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __repr__(self):
        return f"F{self.params.p}^{self.params.n}{list(self.coeffs)}"

    def render(self) -> str:
        """Human-readable form using ``al`` for the adjoined root."""
        if self.params.n == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("al" if i == 1 else f"al^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "(" + " + ".join(terms) + ")" if len(terms) > 1 else (terms[0] if terms else "0")


# Flat add/mul/neg/inv for callers that prefer functions.
def field_add(x: FieldElement, y: FieldElement) -> FieldElement:
    return x + y


def field_mul(x: FieldElement, y: FieldElement) -> FieldElement:
    return x * y


def field_neg(x: FieldElement) -> FieldElement:
    return -x


def field_inv(x: FieldElement) -> FieldElement:
    return x.inverse()
