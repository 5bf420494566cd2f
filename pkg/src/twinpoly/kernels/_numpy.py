"""Pure-numpy implementations of the hot loops.

Field elements are canonical indices ``sum(c_i * p**i)``. Extension-field
arithmetic works on a digit matrix of shape ``(e, N)`` so that every step is a
whole-array operation. ``mod`` holds the low coefficients ``c_0..c_{e-1}`` of
the monic modulus.
"""

import numpy as np

CHUNK = 1 << 20


def to_digits(a, p, e):
    a = np.asarray(a, dtype=np.int64)
    out = np.empty((e,) + a.shape, dtype=np.int64)
    x = a.copy()
    for i in range(e):
        out[i] = x % p
        x //= p
    return out


def from_digits(D, p):
    idx = np.zeros(D.shape[1:], dtype=np.int64)
    for i in range(D.shape[0] - 1, -1, -1):
        idx = idx * p + D[i]
    return idx


def mul_digits(DA, DB, p, e, mod):
    if e == 1:
        return DA * DB % p
    shape = np.broadcast_shapes(DA.shape[1:], DB.shape[1:])
    prod = np.zeros((2 * e - 1,) + shape, dtype=np.int64)
    for i in range(e):
        for j in range(e):
            prod[i + j] += DA[i] * DB[j]
    prod %= p
    for k in range(2 * e - 2, e - 1, -1):
        c = prod[k] % p
        for i in range(e):
            if mod[i]:
                prod[k - e + i] -= c * mod[i]
    return prod[:e] % p


def add_digits(DA, DB, p):
    return (DA + DB) % p


def field_mul(a, b, p, e, mod):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if e == 1:
        return a * b % p
    return from_digits(mul_digits(to_digits(a, p, e), to_digits(b, p, e), p, e, mod), p)


def field_add(a, b, p, e):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if e == 1:
        return (a + b) % p
    if p == 2:
        return a ^ b
    return from_digits(add_digits(to_digits(a, p, e), to_digits(b, p, e), p), p)


def field_neg(a, p, e):
    a = np.asarray(a, dtype=np.int64)
    if p == 2:
        return a.copy()
    if e == 1:
        return (-a) % p
    return from_digits((-to_digits(a, p, e)) % p, p)


def poly_roots(coeffs, p, e, mod, first_only):
    """All x in F_{p^e} (ascending index) with sum coeffs[k] x^(deg-k) == 0.

    ``coeffs`` are element indices, leading coefficient first.
    """
    q = p ** e
    C = to_digits(np.asarray(coeffs, dtype=np.int64), p, e)  # (e, deg+1)
    found = []
    for start in range(0, q, CHUNK):
        X = to_digits(np.arange(start, min(q, start + CHUNK), dtype=np.int64), p, e)
        acc = np.broadcast_to(C[:, 0:1], X.shape).copy()
        for k in range(1, C.shape[1]):
            acc = (mul_digits(acc, X, p, e, mod) + C[:, k:k + 1]) % p
        hits = np.flatnonzero(~acc.any(axis=0)) + start
        if hits.size:
            found.extend(hits.tolist())
            if first_only:
                return np.array(found[:1], dtype=np.int64)
    return np.array(found, dtype=np.int64)


def poly_digits(q, d, lo=0, hi=None):
    """Coefficient digits (a_1..a_d) for poly indices in [lo, hi), shape (d, n)."""
    if hi is None:
        hi = q ** d
    idx = np.arange(lo, hi, dtype=np.int64)
    out = np.empty((d, idx.size), dtype=np.int64)
    for k in range(d - 1, -1, -1):
        out[k] = idx % q
        idx //= q
    return out


def rootless_mask(q, d, add_t, mul_t, lo, hi):
    """True where the monic poly has no root in F_q (index range [lo, hi))."""
    A = poly_digits(q, d, lo, hi)
    ok = np.ones(A.shape[1], dtype=np.bool_)
    for x in range(q):
        acc = np.full(A.shape[1], 1, dtype=np.int64)
        for k in range(d):
            acc = add_t[mul_t[acc, x], A[k]]
        ok &= acc != 0
    return ok


def mark_products(out, q, d, k, factors, add_t, mul_t):
    """Clear ``out`` at every product f*g, f from ``factors`` (degree k), g monic of degree d-k."""
    m = d - k
    G = poly_digits(q, m)
    n = G.shape[1]
    for f in factors.tolist():
        F = [1] + [(f // q ** (k - 1 - i)) % q for i in range(k)]
        # product coefficients, leading first; leading is 1
        P = [None] * (d + 1)
        for s in range(1, d + 1):
            acc = np.zeros(n, dtype=np.int64)
            for i in range(max(0, s - m), min(k, s) + 1):
                j = s - i
                gj = np.ones(n, dtype=np.int64) if j == 0 else G[j - 1]
                acc = add_t[acc, mul_t[F[i], gj]]
            P[s] = acc
        idx = np.zeros(n, dtype=np.int64)
        for s in range(1, d + 1):
            idx = idx * q + P[s]
        out[idx] = False


def scalar_shift_counts(bitmap, q, add_t):
    """counts[h] = #{f : f and f+h both set} for every constant h."""
    B = bitmap.reshape(-1, q)
    counts = np.zeros(q, dtype=np.int64)
    for h in range(q):
        counts[h] = np.count_nonzero(B & B[:, add_t[:, h]])
    return counts


def affine_curve_count(h, p, e, mod):
    """#{(x, y) in F_q^2 : h*x^3 == y^2 - y}."""
    q = p ** e
    Y = to_digits(np.arange(q, dtype=np.int64), p, e)
    V = (mul_digits(Y, Y, p, e, mod) - Y) % p
    hist = np.bincount(from_digits(V, p), minlength=q)
    X = Y
    X3 = mul_digits(mul_digits(X, X, p, e, mod), X, p, e, mod)
    H = to_digits(np.array([h], dtype=np.int64), p, e)
    W = from_digits(mul_digits(X3, H, p, e, mod), p)
    return int(hist[W].sum())

