"""Numba-compiled implementations of the hot loops (same contracts as ``_numpy``)."""

import numpy as np
from numba import njit


@njit(cache=True)
def _decode(a, p, e, out):
    for i in range(e):
        out[i] = a % p
        a //= p


@njit(cache=True)
def _encode(D, p, e):
    idx = 0
    for i in range(e - 1, -1, -1):
        idx = idx * p + D[i]
    return idx


@njit(cache=True)
def _mul_d(DA, DB, p, e, mod, prod, out):
    for k in range(2 * e - 1):
        prod[k] = 0
    for i in range(e):
        ai = DA[i]
        if ai == 0:
            continue
        for j in range(e):
            prod[i + j] += ai * DB[j]
    for k in range(2 * e - 2, e - 1, -1):
        c = prod[k] % p
        if c != 0:
            for i in range(e):
                prod[k - e + i] -= c * mod[i]
    for i in range(e):
        out[i] = prod[i] % p


@njit(cache=True)
def _mul1(a, b, p, e, mod, da, db, prod, out):
    if e == 1:
        return a * b % p
    _decode(a, p, e, da)
    _decode(b, p, e, db)
    _mul_d(da, db, p, e, mod, prod, out)
    return _encode(out, p, e)


@njit(cache=True)
def _add1(a, b, p, e):
    if e == 1:
        return (a + b) % p
    if p == 2:
        return a ^ b
    idx = 0
    scale = 1
    for _ in range(e):
        idx += ((a % p + b % p) % p) * scale
        a //= p
        b //= p
        scale *= p
    return idx


@njit(cache=True)
def field_mul(a, b, p, e, mod):
    n = a.shape[0]
    out = np.empty(n, dtype=np.int64)
    da = np.empty(e, dtype=np.int64)
    db = np.empty(e, dtype=np.int64)
    prod = np.empty(2 * e - 1, dtype=np.int64)
    res = np.empty(e, dtype=np.int64)
    for t in range(n):
        out[t] = _mul1(a[t], b[t], p, e, mod, da, db, prod, res)
    return out


@njit(cache=True)
def field_add(a, b, p, e):
    n = a.shape[0]
    out = np.empty(n, dtype=np.int64)
    for t in range(n):
        out[t] = _add1(a[t], b[t], p, e)
    return out


@njit(cache=True)
def field_neg(a, p, e):
    n = a.shape[0]
    out = np.empty(n, dtype=np.int64)
    for t in range(n):
        x = a[t]
        idx = 0
        scale = 1
        for _ in range(e):
            idx += ((p - x % p) % p) * scale
            x //= p
            scale *= p
        out[t] = idx
    return out


@njit(cache=True)
def poly_roots(coeffs, p, e, mod, first_only):
    q = p ** e
    deg = coeffs.shape[0] - 1
    C = np.empty((deg + 1, e), dtype=np.int64)
    for k in range(deg + 1):
        _decode(coeffs[k], p, e, C[k])
    X = np.empty(e, dtype=np.int64)
    acc = np.empty(e, dtype=np.int64)
    tmp = np.empty(e, dtype=np.int64)
    prod = np.empty(2 * e - 1, dtype=np.int64)
    found = np.empty(max(deg, 1), dtype=np.int64)
    nfound = 0
    for x in range(q):
        _decode(x, p, e, X)
        for i in range(e):
            acc[i] = C[0, i]
        for k in range(1, deg + 1):
            _mul_d(acc, X, p, e, mod, prod, tmp)
            for i in range(e):
                acc[i] = (tmp[i] + C[k, i]) % p
        zero = True
        for i in range(e):
            if acc[i] != 0:
                zero = False
                break
        if zero:
            found[nfound] = x
            nfound += 1
            if first_only or nfound == deg:
                break
    return found[:nfound].copy()


@njit(cache=True, nogil=True)
def rootless_mask(q, d, add_t, mul_t, lo, hi):
    n = hi - lo
    ok = np.ones(n, dtype=np.bool_)
    A = np.empty(d, dtype=np.int64)
    for t in range(n):
        idx = lo + t
        for k in range(d - 1, -1, -1):
            A[k] = idx % q
            idx //= q
        for x in range(q):
            acc = 1
            for k in range(d):
                acc = add_t[mul_t[acc, x], A[k]]
            if acc == 0:
                ok[t] = False
                break
    return ok


@njit(cache=True)
def mark_products(out, q, d, k, factors, add_t, mul_t):
    m = d - k
    F = np.empty(k + 1, dtype=np.int64)
    G = np.empty(m + 1, dtype=np.int64)
    P = np.empty(d + 1, dtype=np.int64)
    ng = q ** m
    F[0] = 1
    G[0] = 1
    for t in range(factors.shape[0]):
        f = factors[t]
        for i in range(k, 0, -1):
            F[i] = f % q
            f //= q
        for g in range(ng):
            x = g
            for j in range(m, 0, -1):
                G[j] = x % q
                x //= q
            for s in range(d + 1):
                P[s] = 0
            for i in range(k + 1):
                for j in range(m + 1):
                    P[i + j] = add_t[P[i + j], mul_t[F[i], G[j]]]
            idx = 0
            for s in range(1, d + 1):
                idx = idx * q + P[s]
            out[idx] = False


@njit(cache=True)
def scalar_shift_counts(bitmap, q, add_t):
    rows = bitmap.shape[0] // q
    counts = np.zeros(q, dtype=np.int64)
    members = np.empty(q, dtype=np.int64)
    # sub[c2, c1] = c2 - c1, recovered from the addition table
    sub = np.empty((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            sub[add_t[a, b], a] = b
    for r in range(rows):
        base = r * q
        n = 0
        for c in range(q):
            if bitmap[base + c]:
                members[n] = c
                n += 1
        counts[0] += n
        for i in range(n):
            for j in range(n):
                if i != j:
                    counts[sub[members[j], members[i]]] += 1
    return counts


@njit(cache=True)
def affine_curve_count(h, p, e, mod):
    q = p ** e
    hist = np.zeros(q, dtype=np.int64)
    if e == 1:
        for y in range(p):
            hist[(y * y - y) % p] += 1
        total = 0
        for x in range(p):
            total += hist[h * (x * x % p) % p * x % p]
        return total
    da = np.empty(e, dtype=np.int64)
    db = np.empty(e, dtype=np.int64)
    prod = np.empty(2 * e - 1, dtype=np.int64)
    res = np.empty(e, dtype=np.int64)
    for y in range(q):
        y2 = _mul1(y, y, p, e, mod, da, db, prod, res)
        # y^2 - y == y^2 + (-y)
        negy = 0
        x = y
        scale = 1
        for _ in range(e):
            negy += ((p - x % p) % p) * scale
            x //= p
            scale *= p
        hist[_add1(y2, negy, p, e)] += 1
    total = 0
    for x in range(q):
        x3 = _mul1(_mul1(x, x, p, e, mod, da, db, prod, res), x, p, e, mod, da, db, prod, res)
        total += hist[_mul1(h, x3, p, e, mod, da, db, prod, res)]
    return total
