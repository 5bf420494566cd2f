"""The function-field twin-prime singular series as an exact power series in u = 1/q."""

from __future__ import annotations

import decimal
import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import closed_form, curve
from .census import divisors, gauss_count, mobius
from .field import PrimePower, make_field


class RationalSeries:
    """Truncated power series sum_{k<=order} c_k u^k with Fraction coefficients.

    Products and compositions are cut at the smaller order of the operands;
    nothing above ``order`` is ever read.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = max(len(coeffs) - 1, 0)
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = coeffs[:order + 1] + [Fraction(0)] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> "RationalSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "RationalSeries":
        return cls([1], order)

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient u^{k} outside order {self.order}")
        return self.coeffs[k]

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"RationalSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order: int) -> "RationalSeries":
        return RationalSeries(self.coeffs[:order + 1], min(order, self.order))

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        m = min(self.order, other.order)
        return RationalSeries([self.coeffs[k] + other.coeffs[k] for k in range(m + 1)], m)

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "RationalSeries":
        c = Fraction(c)
        return RationalSeries([c * x for x in self.coeffs], self.order)

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        m = min(self.order, other.order)
        out = [Fraction(0)] * (m + 1)
        for i, a in enumerate(self.coeffs[:m + 1]):
            if a:
                for j in range(m + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return RationalSeries(out, m)

    def compose_with_power(self, d: int, order: int | None = None) -> "RationalSeries":
        """s(u^d), valid through u^order (default: d * self.order)."""
        if d < 1:
            raise ValueError("d must be >= 1")
        if order is None:
            order = d * self.order
        if order > d * self.order + d - 1:
            raise ValueError("not enough coefficients for the requested order")
        out = [Fraction(0)] * (order + 1)
        for k, c in enumerate(self.coeffs):
            if k * d > order:
                break
            out[k * d] = c
        return RationalSeries(out, order)

    def evaluate(self, t) -> Fraction:
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


def exp_series(s: RationalSeries) -> RationalSeries:
    """exp(s) for s with zero constant term, via k e_k = sum_{j=1}^k j s_j e_{k-j}."""
    if s.coeffs[0] != 0:
        raise ValueError("exp needs a series with zero constant term")
    m = s.order
    e = [Fraction(1)] + [Fraction(0)] * m
    for k in range(1, m + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if s.coeffs[j]:
                acc += j * s.coeffs[j] * e[k - j]
        e[k] = acc / k
    return RationalSeries(e, m)


def p_poly(d: int) -> RationalSeries:
    """P_d(u) = (1/d) sum_{k | d} mu(k) u^(d - d/k), so P_d(1/q) q^d = pi_d(q)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    out = [Fraction(0)] * d
    for k in divisors(d):
        out[d - d // k] += Fraction(mobius(k), d)
    return RationalSeries(out, d - 1)


def lambda_series(m: int) -> RationalSeries:
    """lambda(u) = sum_{k>=2} (2 - 2^k)/k u^(k-1), through u^m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    out = [Fraction(0)] * (m + 1)
    for k in range(2, m + 2):
        out[k - 1] = Fraction(2 - 2 ** k, k)
    return RationalSeries(out, m)


def log_s_series(m: int) -> RationalSeries:
    """sum_{d=1}^m P_d(u) lambda(u^d) mod u^(m+1); lambda(u^d) = O(u^d) makes d > m irrelevant."""
    total = RationalSeries.zero(m)
    for d in range(1, m + 1):
        lam = lambda_series(max(1, m // d)).compose_with_power(d, m)
        pd = RationalSeries(p_poly(d).coeffs[:m + 1], m)
        total = total + pd * lam
    return total


def s_series(m: int) -> RationalSeries:
    """S(u) mod u^(m+1)."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return RationalSeries.one(0)
    return exp_series(log_s_series(m))


def singular_value(q, m: int) -> Fraction:
    """S_m(1/q): the degree-m truncation of S evaluated at u = 1/q."""
    return s_series(m).evaluate(Fraction(1, q))


# Upper bound on the size (in bits) of an exact Euler product before switching
# to the high-precision route.
EXACT_PRODUCT_BITS = 1 << 20
PRODUCT_DIGITS = 80


def euler_product(q: int, D: int) -> Fraction:
    """prod_{d=1}^D ((1 - 2q^-d) / (1 - q^-d)^2)^pi_d(q).

    Exact when the result fits in ``EXACT_PRODUCT_BITS``; otherwise the product
    is formed through logarithms at ``PRODUCT_DIGITS`` significant digits and
    returned as the rational value of that decimal (relative error below
    10^-(PRODUCT_DIGITS - 5)).
    """
    if q < 2 or D < 1:
        raise ValueError("need q >= 2 and D >= 1")
    exps = [gauss_count(q, d) for d in range(1, D + 1)]
    if q == 2:
        return Fraction(0)  # the d = 1 factor vanishes
    bits = sum(n * d * math.log2(q) * 3 for d, n in enumerate(exps, start=1))
    if bits <= EXACT_PRODUCT_BITS:
        out = Fraction(1)
        for d, n in enumerate(exps, start=1):
            qd = q ** d
            out *= Fraction((qd - 2) * qd, (qd - 1) ** 2) ** n
        return out
    with decimal.localcontext() as ctx:
        ctx.prec = PRODUCT_DIGITS
        log_total = decimal.Decimal(0)
        for d, n in enumerate(exps, start=1):
            qd = decimal.Decimal(q) ** d
            log_total += n * ((qd - 2) * qd / (qd - 1) ** 2).ln()
        return Fraction(log_total.exp())


def prediction(d: int, q: int) -> Fraction:
    """q^d / d^2 * S_{d-1}(1/q)."""
    if d not in (1, 2, 3):
        raise ValueError("predictions are tabulated for d in {1, 2, 3}")
    PrimePower.from_q(q)
    return Fraction(q ** d, d * d) * singular_value(q, d - 1)


def error_term(d: int, q: int) -> Fraction:
    """E(d, q; (0, 1)) defined by pi = prediction * (1 + E), pi from the closed forms.

    When prediction and count both vanish (d = 3, q = 2) every E satisfies the
    identity; 0 is returned, matching the q = 2 mod 3 row where the closed form
    and the prediction coincide as polynomials in q.
    """
    pred = prediction(d, q)
    actual = closed_form.closed_form_count(d, q)
    if pred == 0:
        if actual == 0:
            return Fraction(0)
        raise ZeroDivisionError(f"prediction vanishes at d={d}, q={q} but the count is {actual}")
    return Fraction(actual) / pred - 1


def primes_up_to(n: int) -> list[int]:
    """Sieve of Eratosthenes."""
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=np.bool_)
    sieve[:2] = False
    for k in range(2, int(n ** 0.5) + 1):
        if sieve[k]:
            sieve[k * k::k] = False
    return np.flatnonzero(sieve).tolist()


def sato_tate_average(p_max: int) -> Fraction:
    """Mean of a_p^2 / p over primes 7 <= p <= p_max with p = 1 mod 3."""
    if p_max < 7:
        raise ValueError("p_max must be >= 7")
    primes = [p for p in primes_up_to(p_max) if p % 3 == 1]
    den = math.prod(primes)
    num = 0
    for p in primes:
        a = curve.trace_a(make_field(p, 1), 1)
        num += a * a * (den // p)
    return Fraction(num, den * len(primes))


def sato_tate_terms(primes: Sequence[int]) -> list[tuple[int, int]]:
    """(p, a_p) pairs, handy for inspecting the distribution."""
    return [(p, curve.trace_a(make_field(p, 1), 1)) for p in primes]
