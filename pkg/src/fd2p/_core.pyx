# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pycore`` for the shared conventions."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t

cnp.import_array()


cdef inline int64_t _md(int64_t a, int64_t p) noexcept nogil:
    a %= p
    return a + p if a < 0 else a


cdef int64_t _inv(int64_t a, int64_t p) noexcept nogil:
    cdef int64_t r = 1, e = p - 2
    a = _md(a, p)
    while e:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


cdef void _mul_into(const int64_t* x, const int64_t* y, int64_t* out, int64_t* acc,
                    const int64_t[:, ::1] table, int64_t G, int64_t n, int64_t p,
                    const int64_t[::1] f) noexcept nogil:
    cdef int64_t w = 2 * n - 1
    cdef int64_t g, h, s, t, k, u, i, c, xs
    for i in range(G * w):
        acc[i] = 0
    for g in range(G):
        for s in range(n):
            xs = x[g * n + s]
            if xs == 0:
                continue
            for h in range(G):
                k = table[g, h]
                for t in range(n):
                    acc[k * w + s + t] += xs * y[h * n + t]
    for k in range(G):
        for u in range(w):
            acc[k * w + u] = _md(acc[k * w + u], p)
        u = w - 1
        while u >= n:
            c = acc[k * w + u]
            if c:
                for i in range(n):
                    acc[k * w + u - n + i] = _md(acc[k * w + u - n + i] - c * f[i], p)
            u -= 1
        for s in range(n):
            out[k * n + s] = acc[k * w + s]


def mul(x, y, table, p, n, f):
    cdef const int64_t[::1] xv = np.ascontiguousarray(x, dtype=np.int64)
    cdef const int64_t[::1] yv = np.ascontiguousarray(y, dtype=np.int64)
    cdef const int64_t[:, ::1] tv = np.ascontiguousarray(table, dtype=np.int64)
    cdef const int64_t[::1] fv = np.ascontiguousarray(f, dtype=np.int64)
    cdef int64_t G = tv.shape[0], nn = n
    out = np.zeros(G * nn, dtype=np.int64)
    acc = np.zeros(G * (2 * nn - 1), dtype=np.int64)
    cdef int64_t[::1] ov = out
    cdef int64_t[::1] av = acc
    _mul_into(&xv[0], &yv[0], &ov[0], &av[0], tv, G, nn, p, fv)
    return out


cdef void _left_into(const int64_t* x, int64_t* L, int64_t* xa,
                     const int64_t[:, ::1] table, const int64_t[:, :, ::1] T,
                     int64_t G, int64_t n, int64_t p) noexcept nogil:
    # xa[g, t, u] = (x_g * alpha^t)_u ; L is d x d row-major
    cdef int64_t d = G * n
    cdef int64_t g, h, s, t, u, k, v
    for g in range(G):
        for t in range(n):
            for u in range(n):
                v = 0
                for s in range(n):
                    v += x[g * n + s] * T[s, t, u]
                xa[(g * n + t) * n + u] = v % p
    for s in range(d * d):
        L[s] = 0
    for g in range(G):
        for h in range(G):
            k = table[g, h]
            for t in range(n):
                for u in range(n):
                    L[(k * n + u) * d + h * n + t] += xa[(g * n + t) * n + u]
    for s in range(d * d):
        L[s] %= p


def left_matrix(x, table, p, n, f):
    from ._pycore import _alpha_table
    cdef const int64_t[::1] xv = np.ascontiguousarray(x, dtype=np.int64)
    cdef const int64_t[:, ::1] tv = np.ascontiguousarray(table, dtype=np.int64)
    cdef const int64_t[:, :, ::1] Tv = _alpha_table(p, n, np.asarray(f, dtype=np.int64))
    cdef int64_t G = tv.shape[0], nn = n, d = G * n
    L = np.zeros((d, d), dtype=np.int64)
    xa = np.zeros(G * nn * nn, dtype=np.int64)
    cdef int64_t[:, ::1] Lv = L
    cdef int64_t[::1] xav = xa
    _left_into(&xv[0], &Lv[0, 0], &xav[0], tv, Tv, G, nn, p)
    return L


cdef int64_t _rref(int64_t* m, int64_t rows, int64_t cols, int64_t p, int64_t* piv) noexcept nogil:
    cdef int64_t r = 0, c, k, j, i, fac, inv, tmp
    for i in range(rows * cols):
        m[i] = _md(m[i], p)
    for c in range(cols):
        if r == rows:
            break
        k = r
        while k < rows and m[k * cols + c] == 0:
            k += 1
        if k == rows:
            continue
        if k != r:
            for j in range(cols):
                tmp = m[r * cols + j]
                m[r * cols + j] = m[k * cols + j]
                m[k * cols + j] = tmp
        inv = _inv(m[r * cols + c], p)
        for j in range(c, cols):
            m[r * cols + j] = m[r * cols + j] * inv % p
        for i in range(rows):
            if i == r:
                continue
            fac = m[i * cols + c]
            if fac == 0:
                continue
            for j in range(c, cols):
                m[i * cols + j] = _md(m[i * cols + j] - fac * m[r * cols + j], p)
        piv[r] = c
        r += 1
    return r


def rref_inplace(m, p):
    cdef int64_t[:, ::1] mv = m
    cdef int64_t rows = mv.shape[0], cols = mv.shape[1]
    if rows == 0 or cols == 0:
        return []
    pivots = np.zeros(min(rows, cols), dtype=np.int64)
    cdef int64_t[::1] pv = pivots
    cdef int64_t r = _rref(&mv[0, 0], rows, cols, p, &pv[0])
    return [int(c) for c in pivots[:r]]


cdef bint _full_rank(int32_t* m, int64_t d, int32_t p, const int32_t* inv_tab,
                     const int32_t* mt) noexcept nogil:
    # forward elimination only; early exit on a missing pivot.  Entries stay
    # in [0, p); mt[a*p + b] = a*b mod p replaces the division.
    cdef int64_t c, k, j, i
    cdef int32_t fac, inv, tmp
    cdef int32_t* rc
    cdef int32_t* ri
    for c in range(d):
        k = c
        while k < d and m[k * d + c] == 0:
            k += 1
        if k == d:
            return False
        if k != c:
            for j in range(c, d):
                tmp = m[c * d + j]
                m[c * d + j] = m[k * d + j]
                m[k * d + j] = tmp
        rc = m + c * d
        inv = inv_tab[rc[c]]
        if inv != 1:
            for j in range(c, d):
                rc[j] = mt[inv * p + rc[j]]
        for i in range(c + 1, d):
            ri = m + i * d
            fac = ri[c]
            if fac == 0:
                continue
            fac = (p - fac) * p
            for j in range(c + 1, d):
                tmp = ri[j] + mt[fac + rc[j]]
                ri[j] = tmp - p if tmp >= p else tmp
            ri[c] = 0
    return True


def scan(base, gens, table, inv, p, n, f, want_units, chunk=None):
    from ._pycore import _alpha_table
    cdef const int64_t[:, ::1] tv = np.ascontiguousarray(table, dtype=np.int64)
    cdef const int64_t[::1] invv = np.ascontiguousarray(inv, dtype=np.int64)
    cdef const int64_t[::1] fv = np.ascontiguousarray(f, dtype=np.int64)
    cdef const int64_t[:, :, ::1] Tv = _alpha_table(p, n, np.asarray(f, dtype=np.int64))
    cdef int64_t G = tv.shape[0], nn = n, pp = p, d = G * n
    gens_arr = np.ascontiguousarray(np.asarray(gens, dtype=np.int64).reshape(-1, d) % p)
    cdef const int64_t[:, ::1] gv = gens_arr
    cdef int64_t k = gv.shape[0]
    x_arr = np.ascontiguousarray(np.asarray(base, dtype=np.int64) % p)
    cdef int64_t[::1] x = x_arr
    star = np.zeros(d, dtype=np.int64)
    prod = np.zeros(d, dtype=np.int64)
    acc = np.zeros(G * (2 * nn - 1), dtype=np.int64)
    L64 = np.zeros(d * d, dtype=np.int64)
    xa = np.zeros(G * nn * nn, dtype=np.int64)
    digits = np.zeros(k + 1, dtype=np.int64)
    cdef int64_t[::1] sv = star, prv = prod, av = acc, L64v = L64, xav = xa, dg = digits
    # L(x) is linear in x: keep the current matrix and add L(gens[j]) per step
    cdef bint want = bool(want_units)
    Lcur = np.zeros(d * d, dtype=np.int32)
    Lgen = np.zeros((max(k, 1), d * d), dtype=np.int32)
    work = np.zeros(d * d, dtype=np.int32)
    inv_tab = np.array([0] + [pow(i, p - 2, p) for i in range(1, p)], dtype=np.int32)
    mul_tab = (np.arange(p)[:, None] * np.arange(p)[None, :] % p).astype(np.int32).ravel()
    cdef int32_t[::1] Lc = Lcur, wv = work, itv = inv_tab, mtv = mul_tab
    cdef int32_t tmp32
    cdef int32_t[:, ::1] Lg = Lgen
    cdef int64_t code, g, s, j, units = 0
    cdef bint hit
    if want:
        _left_into(&x[0], &L64v[0], &xav[0], tv, Tv, G, nn, pp)
        Lcur[:] = L64
        for j in range(k):
            _left_into(&gv[j, 0], &L64v[0], &xav[0], tv, Tv, G, nn, pp)
            Lgen[j] = L64
    cdef int32_t p32 = <int32_t> pp
    cdef int64_t total = pp ** k
    codes = []
    code = 0
    while code < total:
        for g in range(G):
            for s in range(nn):
                sv[g * nn + s] = x[invv[g] * nn + s]
        _mul_into(&sv[0], &x[0], &prv[0], &av[0], tv, G, nn, pp, fv)
        hit = prv[0] == 1
        if hit:
            for j in range(1, d):
                if prv[j] != 0:
                    hit = False
                    break
        if hit:
            codes.append(code)
        if want:
            for s in range(d * d):
                wv[s] = Lc[s]
            if _full_rank(&wv[0], d, p32, &itv[0], &mtv[0]):
                units += 1
        # odometer step: adding gens[j] also handles the wrap p-1 -> 0
        code += 1
        j = 0
        while j < k:
            for s in range(d):
                x[s] = (x[s] + gv[j, s]) % pp
            if want:
                for s in range(d * d):
                    tmp32 = Lc[s] + Lg[j, s]
                    Lc[s] = tmp32 - p32 if tmp32 >= p32 else tmp32
            dg[j] += 1
            if dg[j] < pp:
                break
            dg[j] = 0
            j += 1
    return codes, units
