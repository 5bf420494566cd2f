"""Point counts on X^3 = Y(Y-1), its cubic twists hX^3 = Y(Y-1), and the
weight-2 level-27 newform attached to it.

Only integer and rational quantities are produced: the trace a = 1 + q - #E,
a^2/q and a*a_h/q. Square roots of q never appear.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .field import FieldCtx, PrimePower, is_prime, make_field

# f_E = q - 2q^4 - q^7 + 5q^13 + 4q^16 - 7q^19 + O(q^20)
_NEWFORM = {1: 1, 4: -2, 7: -1, 13: 5, 16: 4, 19: -7}

_class_cache: dict[tuple, int] = {}


def _check_char(ctx: FieldCtx):
    if ctx.p == 3:
        raise ValueError("the curve has bad reduction in characteristic 3")


def cube_class(ctx: FieldCtx, h: int) -> int:
    """Key of the class of h in F_q^x / cubes: h^((q-1)/3), or 1 if cubing is bijective."""
    if h == 0:
        raise ValueError("twist parameter must be nonzero")
    if (ctx.q - 1) % 3:
        return 1
    return ctx._pow(h, (ctx.q - 1) // 3)


def cube_class_representatives(ctx: FieldCtx) -> list[int]:
    """Least index in each cube class, in ascending order."""
    reps: dict[int, int] = {}
    for h in range(1, ctx.q):
        reps.setdefault(cube_class(ctx, h), h)
        if len(reps) == (3 if (ctx.q - 1) % 3 == 0 else 1):
            break
    return sorted(reps.values())


def count_points(ctx: FieldCtx, h=1, use_cache: bool = True) -> int:
    """#E_h(F_q) for E_h: h X^3 = Y(Y-1): affine solutions plus the point at infinity."""
    _check_char(ctx)
    h = int(h)
    if h == 0:
        raise ValueError("twist parameter must be nonzero")
    key = (ctx, cube_class(ctx, h))
    if use_cache and key in _class_cache:
        return _class_cache[key]
    n = kernels.affine_curve_count(h, ctx.p, ctx.e, ctx._mod_arr) + 1
    if use_cache:
        _class_cache[key] = n
    return n


def clear_cache():
    _class_cache.clear()


def trace_a(ctx: FieldCtx, h=1) -> int:
    return 1 + ctx.q - count_points(ctx, h)


def c_squared(ctx: FieldCtx) -> Fraction:
    """c_q^2 = a^2 / q."""
    a = trace_a(ctx, 1)
    return Fraction(a * a, ctx.q)


def c_product(ctx: FieldCtx, h) -> Fraction:
    """c_q * c_{q,h} = a * a_h / q."""
    return Fraction(trace_a(ctx, 1) * trace_a(ctx, h), ctx.q)


@dataclass(frozen=True)
class TraceRecord:
    pp: PrimePower
    h_index: int
    points: int
    a: int = field(init=False)
    c_sq: Fraction = field(init=False)

    def __post_init__(self):
        a = 1 + self.pp.q - self.points
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c_sq", Fraction(a * a, self.pp.q))
        if a * a > 4 * self.pp.q:
            raise AssertionError(f"Hasse bound violated: a={a}, q={self.pp.q}")
        if self.pp.q % 3 == 2 and a != 0:
            raise AssertionError(f"nonzero trace {a} for q = 2 mod 3")
        if self.points < 1:
            raise AssertionError("point count must include the point at infinity")

    def product_with(self, other: "TraceRecord") -> Fraction:
        if other.pp != self.pp:
            raise ValueError("records over different fields")
        return Fraction(self.a * other.a, self.pp.q)


def trace_record(ctx: FieldCtx, h=1) -> TraceRecord:
    return TraceRecord(ctx.pp, int(h), count_points(ctx, h))


def newform_coefficients() -> dict[int, int]:
    """q-expansion coefficients a_1..a_19 of the newform of E."""
    return {n: _NEWFORM.get(n, 0) for n in range(1, 20)}


def _prime_trace(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 3:
        raise ValueError("p = 3 is the bad prime")
    return trace_a(make_field(p, 1), 1)


def newform_trace(p: int, m: int) -> int:
    """alpha_p^m + beta_p^m = 1 + p^m - #E(F_{p^m}), by b_{k+1} = a_p b_k - p b_{k-1}."""
    if m < 0:
        raise ValueError("m must be non-negative")
    ap = _prime_trace(p)
    prev, cur = 2, ap
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, ap * cur - p * prev
    return cur


def newform_prime_power_coefficient(p: int, m: int) -> int:
    """a_{p^m} via a_{p^(k+1)} = a_p a_{p^k} - p a_{p^(k-1)}, a_1 = 1."""
    if m < 0:
        raise ValueError("m must be non-negative")
    ap = _prime_trace(p)
    prev, cur = 1, ap
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, ap * cur - p * prev
    return cur
