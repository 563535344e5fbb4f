"""Pure-Python/numpy kernels.  Same signatures as the compiled ``_core``.

Conventions shared by both backends
-----------------------------------
* An algebra element is a flat int64 vector of length ``G * n``: field
  coefficient of group element ``g`` occupies ``[g*n, (g+1)*n)``, constant
  residue first.
* ``table[g, h]`` is the index of the group product ``g h``; ``inv[g]`` the
  index of ``g^-1``.
* ``f`` is the monic modulus, length ``n + 1``.
"""
from __future__ import annotations

import numpy as np


def _alpha_table(p: int, n: int, f: np.ndarray) -> np.ndarray:
    """``T[s, t, u]`` = coefficient of alpha^u in alpha^(s+t)."""
    T = np.zeros((n, n, n), dtype=np.int64)
    powers = np.zeros((2 * n - 1, n), dtype=np.int64)
    cur = np.zeros(n, dtype=np.int64)
    cur[0] = 1
    for e in range(2 * n - 1):
        powers[e] = cur
        lead = cur[n - 1]
        cur = np.roll(cur, 1)
        cur[0] = 0
        cur = (cur - lead * f[:n]) % p
    for s in range(n):
        for t in range(n):
            T[s, t] = powers[s + t]
    return T


def _reduce_poly(acc: np.ndarray, p: int, n: int, f: np.ndarray) -> np.ndarray:
    """Reduce the last axis (length 2n-1) modulo f, returning length n."""
    acc = acc % p
    for u in range(2 * n - 2, n - 1, -1):
        c = acc[..., u]
        acc[..., u - n:u] -= c[..., None] * f[:n]
        acc[..., u] = 0
        acc %= p
    return acc[..., :n]


def mul(x, y, table, p, n, f):
    G = table.shape[0]
    X = np.asarray(x, dtype=np.int64).reshape(G, n)
    Y = np.asarray(y, dtype=np.int64).reshape(G, n)
    P = np.zeros((G, G, 2 * n - 1), dtype=np.int64)
    for s in range(n):
        for t in range(n):
            P[:, :, s + t] += np.outer(X[:, s], Y[:, t])
    acc = np.zeros((G, 2 * n - 1), dtype=np.int64)
    np.add.at(acc, table.ravel(), P.reshape(G * G, 2 * n - 1))
    return _reduce_poly(acc, p, n, np.asarray(f, dtype=np.int64)).reshape(G * n).copy()


def left_matrix(x, table, p, n, f):
    """Matrix of y -> x*y over F_p in the flat coordinates."""
    G = table.shape[0]
    d = G * n
    X = np.asarray(x, dtype=np.int64).reshape(G, n)
    T = _alpha_table(p, n, np.asarray(f, dtype=np.int64))
    XA = np.einsum("gs,stu->gtu", X, T) % p
    L = np.zeros((d, d), dtype=np.int64)
    for g in range(G):
        for h in range(G):
            k = table[g, h]
            L[k * n:(k + 1) * n, h * n:(h + 1) * n] += XA[g].T
    return L % p


def rref_inplace(m, p):
    """Gauss-Jordan over F_p in place; returns the pivot columns."""
    rows, cols = m.shape
    m %= p
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
        m[r] = m[r] * pow(int(m[r, c]), p - 2, p) % p
        col = m[:, c].copy()
        col[r] = 0
        m -= np.outer(col, m[r])
        m %= p
        pivots.append(c)
        r += 1
    return pivots


def _batched_full_rank(M, p):
    B, d, _ = M.shape
    M %= p
    inv_tab = np.array([0] + [pow(i, p - 2, p) for i in range(1, p)], dtype=np.int64)
    ok = np.ones(B, dtype=bool)
    idx = np.arange(B)
    for c in range(d):
        nz = M[:, c:, c] != 0
        ok &= nz.any(axis=1)
        piv = nz.argmax(axis=1) + c
        row_c = M[idx, c].copy()
        M[idx, c] = M[idx, piv]
        M[idx, piv] = row_c
        M[:, c] = M[:, c] * inv_tab[M[:, c, c]][:, None] % p
        fac = M[:, c + 1:, c]
        M[:, c + 1:] = (M[:, c + 1:] - fac[:, :, None] * M[:, None, c]) % p
    return ok


def scan(base, gens, table, inv, p, n, f, want_units, chunk=1 << 14):
    """Enumerate base + sum c_j gens_j over all c in F_p^k.

    Returns ``(codes, units)``: the codes ``sum c_j p^j`` of elements x with
    x* x == 1, and (if ``want_units``) how many elements are invertible.
    """
    G = table.shape[0]
    d = G * n
    f = np.asarray(f, dtype=np.int64)
    gens = np.asarray(gens, dtype=np.int64).reshape(-1, d)
    base = np.asarray(base, dtype=np.int64)
    k = gens.shape[0]
    total = p ** k
    weights = p ** np.arange(k, dtype=np.int64)
    one = np.zeros(d, dtype=np.int64)
    one[0] = 1
    T = _alpha_table(p, n, f)
    codes: list[int] = []
    units = 0
    for start in range(0, total, chunk):
        c = np.arange(start, min(total, start + chunk), dtype=np.int64)
        digits = (c[:, None] // weights) % p
        X = (base + digits @ gens) % p
        B = X.shape[0]
        X3 = X.reshape(B, G, n)
        S3 = X3[:, inv, :]
        acc = np.zeros((B, G, 2 * n - 1), dtype=np.int64)
        for g in range(G):
            for h in range(G):
                kk = table[g, h]
                for s in range(n):
                    for t in range(n):
                        acc[:, kk, s + t] += S3[:, g, s] * X3[:, h, t]
        prod = _reduce_poly(acc, p, n, f).reshape(B, d)
        hit = np.all(prod == one, axis=1)
        codes.extend(int(v) for v in c[hit])
        if want_units:
            XA = np.einsum("bgs,stu->bgtu", X3, T) % p
            L = np.zeros((B, d, d), dtype=np.int64)
            for g in range(G):
                for h in range(G):
                    kk = table[g, h]
                    L[:, kk * n:(kk + 1) * n, h * n:(h + 1) * n] += XA[:, g].transpose(0, 2, 1)
            units += int(_batched_full_rank(L, p).sum())
    return codes, units
