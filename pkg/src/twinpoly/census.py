"""Brute-force ground truth: irreducibility bitmaps and shifted-tuple counts."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kernels
from .field import DEFAULT_MAX_ELEMENTS, FieldCtx, FieldSizeError, factorize
from .polyring import format_poly, parse_poly


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    fac = factorize(n)
    if any(k > 1 for k in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(n: int) -> list[int]:
    small = [k for k in range(1, int(n ** 0.5) + 1) if n % k == 0]
    return sorted(set(small + [n // k for k in small]))


def gauss_count(q: int, d: int) -> int:
    """Number of monic irreducible polynomials of degree d over F_q."""
    total = sum(mobius(k) * q ** (d // k) for k in divisors(d))
    if total % d:
        raise AssertionError(f"Gauss sum {total} not divisible by d={d}")
    return total // d


@lru_cache(maxsize=64)
def _bitmap_cached(ctx: FieldCtx, d: int, workers: int) -> np.ndarray:
    q = ctx.q
    n = q ** d
    if d == 1:
        out = np.ones(n, dtype=np.bool_)
    elif d <= 3:
        t = ctx.tables()
        if workers <= 1:
            out = kernels.rootless_mask(q, d, t["add"], t["mul"])
        else:
            bounds = np.linspace(0, n, workers + 1).astype(np.int64).tolist()
            with ThreadPoolExecutor(workers) as pool:
                parts = list(pool.map(
                    lambda lh: kernels.rootless_mask(q, d, t["add"], t["mul"], lh[0], lh[1]),
                    zip(bounds[:-1], bounds[1:])))
            out = np.concatenate(parts)
    else:
        # sieve: clear every product of an irreducible factor of degree k <= d/2
        # with an arbitrary monic cofactor
        t = ctx.tables()
        out = np.ones(n, dtype=np.bool_)
        for k in range(1, d // 2 + 1):
            factors = np.flatnonzero(_bitmap_cached(ctx, k, 1))
            kernels.mark_products(out, q, d, k, factors, t["add"], t["mul"])
    out.setflags(write=False)
    return out


def irreducible_bitmap(ctx: FieldCtx, d: int, workers: int = 1,
                       max_elements: int = DEFAULT_MAX_ELEMENTS) -> np.ndarray:
    """Read-only boolean array; entry i is True iff the monic poly with index i is irreducible.

    ``workers`` > 1 partitions the index range for degrees 2 and 3; the result
    does not depend on the partition.
    """
    if d < 1:
        raise ValueError("degree must be >= 1")
    if ctx.q ** d > max_elements:
        raise FieldSizeError(f"q^d = {ctx.q ** d} exceeds bound {max_elements}")
    return _bitmap_cached(ctx, d, max(1, int(workers)))


@dataclass(frozen=True)
class ShiftTuple:
    """Pairwise distinct shifts h_1..h_k; each is a coefficient tuple, leading first."""

    ctx: FieldCtx
    shifts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        norm = []
        for h in self.shifts:
            h = tuple(int(c) for c in h)
            while len(h) > 1 and h[0] == 0:
                h = h[1:]
            if not h or any(not 0 <= c < self.ctx.q for c in h):
                raise ValueError(f"invalid shift {h!r}")
            norm.append(h)
        if len(set(norm)) != len(norm):
            raise ValueError("shifts must be pairwise distinct")
        object.__setattr__(self, "shifts", tuple(norm))

    @classmethod
    def scalar(cls, ctx: FieldCtx, *hs: int) -> "ShiftTuple":
        return cls(ctx, tuple((int(h),) for h in hs))

    @classmethod
    def parse(cls, ctx: FieldCtx, texts: Sequence[str]) -> "ShiftTuple":
        return cls(ctx, tuple(tuple(parse_poly(ctx, t)) for t in texts))

    def degree_bound(self) -> int:
        """Smallest d such that every shift has degree < d."""
        return max(len(h) for h in self.shifts)

    def labels(self) -> list[str]:
        return [format_poly(h) for h in self.shifts]

    def translate(self, c: int) -> "ShiftTuple":
        out = []
        for h in self.shifts:
            h = list(h)
            h[-1] = self.ctx._add(h[-1], c)
            out.append(tuple(h))
        return ShiftTuple(self.ctx, tuple(out))


def _shifted_indices(ctx: FieldCtx, d: int, shift: tuple[int, ...]) -> np.ndarray:
    q = ctx.q
    add_t = ctx.tables()["add"]
    idx = np.arange(q ** d, dtype=np.int64)
    out = np.zeros_like(idx)
    padded = (0,) * (d - len(shift)) + shift
    rest = idx
    scale = 1
    for k in range(d - 1, -1, -1):  # digit k holds a_{k+1}; the last one is the constant term
        digit = rest % q
        rest = rest // q
        out += add_t[digit, padded[k]] * scale
        scale *= q
    return out


def count_tuple(t: ShiftTuple, d: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> int:
    """#{f monic of degree d : f + h_i irreducible for every shift h_i}."""
    if t.degree_bound() > d:
        raise ValueError(f"shift degrees must be < d = {d}")
    bitmap = irreducible_bitmap(t.ctx, d, max_elements=max_elements)
    ok = np.ones(bitmap.size, dtype=np.bool_)
    for h in t.shifts:
        ok &= bitmap[_shifted_indices(t.ctx, d, h)]
    return int(np.count_nonzero(ok))


def count_all_scalar_shifts(ctx: FieldCtx, d: int,
                            max_elements: int = DEFAULT_MAX_ELEMENTS) -> dict[int, int]:
    """{h: pi(d, q; (0, h))} for every nonzero h, from a single bitmap pass."""
    bitmap = irreducible_bitmap(ctx, d, max_elements=max_elements)
    counts = kernels.scalar_shift_counts(bitmap, ctx.q, ctx.tables()["add"])
    return {h: int(counts[h]) for h in range(1, ctx.q)}
