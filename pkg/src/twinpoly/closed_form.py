"""Exact closed forms for pi(d, q; (0, h)), d <= 3.

Each formula is evaluated as an integer numerator over d^2 and the
divisibility is asserted; a failed assertion means a transcription error,
never a rounding issue.
"""

from __future__ import annotations

from fractions import Fraction

from . import curve
from .field import PrimePower, field_of_order


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise AssertionError(f"{what}: numerator {num} not divisible by {den}")
    return num // den


def pi1(q: int) -> int:
    PrimePower.from_q(q)
    return q


def pi2(q: int) -> int:
    PrimePower.from_q(q)
    if q % 2 == 0:
        return _exact_div(q * (q - 2), 4, f"pi2({q})")
    chi = 1 if (q - 1) // 2 % 2 == 0 else -1  # (-1)^((q-1)/2)
    return _exact_div(q * (q - 2 + chi), 4, f"pi2({q})")


def pi3(q: int) -> int:
    """pi(3, q; (0, 1))."""
    ctx = field_of_order(q)
    r = q % 3
    if r == 0:
        num = q ** 3 - q ** 2 - 3 * q
    elif r == 1:
        a = curve.trace_a(ctx, 1)
        num = q ** 3 + q * a * a - 3 * q ** 2 - 2 * q
    else:
        num = q ** 3 - q ** 2 - 2 * q
    return _exact_div(num, 9, f"pi3({q})")


def pi3_shift(q: int, h) -> int:
    """pi(3, q; (0, h)) for nonzero h (an element index of the canonical F_q)."""
    ctx = field_of_order(q)
    h = int(h)
    if not 0 < h < q:
        raise ValueError("shift must be a nonzero element")
    if q % 3 != 1 or ctx._is_cube(h):
        return pi3(q)
    a = curve.trace_a(ctx, 1)
    ah = curve.trace_a(ctx, h)
    return _exact_div(q ** 3 + q * a * ah - 8 * q, 9, f"pi3_shift({q}, {h})")


def average_pi3(q: int) -> Fraction:
    """Mean of pi(3, q; (0, h)) over h in F_q^x."""
    PrimePower.from_q(q)
    if q < 3:
        raise ValueError("average_pi3 needs q >= 3")
    r = q % 3
    lin = {0: 3, 1: 6, 2: 2}[r]
    return Fraction(q ** 3 - q ** 2 - lin * q, 9)


def closed_form_count(d: int, q: int, h: int = 1):
    """Dispatch to pi1/pi2/pi3(_shift); returns None when no formula exists."""
    if d == 1:
        return pi1(q)
    if d == 2 and h == 1:
        return pi2(q)
    if d == 3:
        return pi3(q) if h == 1 else pi3_shift(q, h)
    return None
