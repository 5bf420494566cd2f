"""Monic polynomials over a :class:`~twinpoly.field.FieldCtx`.

A monic polynomial of degree d is ``T^d + a_1 T^(d-1) + ... + a_d`` with
coefficients held as element indices ``(a_1, ..., a_d)``. Its canonical index
is the base-q number with digits a_1 (most significant) .. a_d, so adding a
constant only touches the lowest digit.

Text form: ``T^3 + 2*T + 1``. Coefficients are written as element indices,
which coincide with residues over a prime field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .field import DEFAULT_MAX_ELEMENTS, Embedding, FieldCtx, FieldSizeError, FqElem, factorize

VAR = "T"


@dataclass(frozen=True)
class MonicPoly:
    ctx: FieldCtx
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("monic polynomials here have degree >= 1")
        coeffs = tuple(int(c) for c in self.coeffs)
        if any(not 0 <= c < self.ctx.q for c in coeffs):
            raise ValueError("coefficient index out of range")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def d(self) -> int:
        return len(self.coeffs)

    @property
    def index(self) -> int:
        idx = 0
        for c in self.coeffs:
            idx = idx * self.ctx.q + c
        return idx

    @classmethod
    def from_index(cls, ctx: FieldCtx, d: int, idx: int) -> "MonicPoly":
        if not 0 <= idx < ctx.q ** d:
            raise ValueError(f"poly index {idx} out of range for degree {d}")
        digits = []
        for _ in range(d):
            digits.append(idx % ctx.q)
            idx //= ctx.q
        return cls(ctx, tuple(reversed(digits)))

    @classmethod
    def parse(cls, ctx: FieldCtx, text: str) -> "MonicPoly":
        high = parse_poly(ctx, text)
        if len(high) < 2 or high[0] != 1:
            raise ValueError(f"{text!r} is not a monic polynomial of degree >= 1")
        return cls(ctx, tuple(high[1:]))

    def low_first(self) -> list[int]:
        return list(reversed(self.coeffs)) + [1]

    def __call__(self, x) -> FqElem:
        return eval_poly(self, x)

    def __str__(self):
        return format_poly((1,) + self.coeffs)


# -- text form -------------------------------------------------------------

def format_poly(high_first: Sequence[int], var: str = VAR) -> str:
    """Render coefficients (leading first) as ``T^3 + 2*T + 1``."""
    d = len(high_first) - 1
    terms = []
    for k, c in enumerate(high_first):
        power = d - k
        if c == 0:
            continue
        mono = "" if power == 0 else (var if power == 1 else f"{var}^{power}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms) or "0"


_TERM = re.compile(r"^(?:(\d+)\*)?(?:(T)(?:\^(\d+))?)?$")


def parse_poly(ctx: FieldCtx, text: str, var: str = VAR) -> list[int]:
    """Inverse of :func:`format_poly`; returns coefficients leading first
    (no leading zeros; ``[0]`` for the zero polynomial)."""
    by_power: dict[int, int] = {}
    for raw in text.replace(" ", "").split("+"):
        if not raw:
            raise ValueError(f"malformed polynomial {text!r}")
        m = _TERM.match(raw.replace(var, "T"))
        if not m or (m.group(1) is None and m.group(2) is None):
            if raw.isdigit():
                coef, power = int(raw), 0
            else:
                raise ValueError(f"malformed term {raw!r} in {text!r}")
        else:
            coef = int(m.group(1)) if m.group(1) is not None else 1
            if m.group(2) is None:
                power = 0
            else:
                power = int(m.group(3)) if m.group(3) is not None else 1
        if not 0 <= coef < ctx.q:
            raise ValueError(f"coefficient {coef} is not an element index of {ctx!r}")
        if power in by_power:
            by_power[power] = ctx._add(by_power[power], coef)
        else:
            by_power[power] = coef
    top = max((k for k, c in by_power.items() if c), default=0)
    return [by_power.get(k, 0) for k in range(top, -1, -1)]


# -- evaluation and enumeration ------------------------------------------

def eval_poly(f: MonicPoly, x) -> FqElem:
    ctx = f.ctx
    if isinstance(x, FqElem) and x.ctx != ctx:
        raise ValueError("evaluation point lies in a different field")
    x = int(x)
    acc = 1
    for c in f.coeffs:
        acc = ctx._add(ctx._mul(acc, x), c)
    return FqElem(ctx, acc)


def add_const(f: MonicPoly, c) -> MonicPoly:
    """f + c for a scalar c."""
    coeffs = list(f.coeffs)
    coeffs[-1] = f.ctx._add(coeffs[-1], int(c))
    return MonicPoly(f.ctx, tuple(coeffs))


def enumerate_monic(ctx: FieldCtx, d: int,
                    max_elements: int = DEFAULT_MAX_ELEMENTS) -> Iterator[MonicPoly]:
    n = ctx.q ** d
    if n > max_elements:
        raise FieldSizeError(f"{n} monic polynomials of degree {d} exceed bound {max_elements}")
    for idx in range(n):
        yield MonicPoly.from_index(ctx, d, idx)


# -- dense arithmetic (low-first coefficient lists) ----------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _sub(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [ctx._sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _mul(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = ctx._add(out[i + j], ctx._mul(x, y))
    return _trim(out)


def _rem(ctx: FieldCtx, a: list[int], m: list[int]) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    lead_inv = ctx._inv(m[-1])
    while len(a) - 1 >= dm and a:
        c = ctx._mul(a[-1], lead_inv)
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            if mc:
                a[shift + i] = ctx._sub(a[shift + i], ctx._mul(c, mc))
        _trim(a)
    return a


def _gcd(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _rem(ctx, a, b)
    if a:
        inv = ctx._inv(a[-1])
        a = [ctx._mul(c, inv) for c in a]
    return a


def _powmod(ctx: FieldCtx, base: list[int], n: int, m: list[int]) -> list[int]:
    result = [1]
    base = _rem(ctx, base, m)
    while n:
        if n & 1:
            result = _rem(ctx, _mul(ctx, result, base), m)
        n >>= 1
        if n:
            base = _rem(ctx, _mul(ctx, base, base), m)
    return result


# -- irreducibility --------------------------------------------------------

def _has_root(f: MonicPoly) -> bool:
    ctx = f.ctx
    for x in range(ctx.q):
        acc = 1
        for c in f.coeffs:
            acc = ctx._add(ctx._mul(acc, x), c)
        if acc == 0:
            return True
    return False


def _frobenius_powers(f: MonicPoly, upto: int) -> list[list[int]]:
    """[T^(q^k) mod f for k = 0..upto]."""
    ctx, m = f.ctx, f.low_first()
    out = [_rem(ctx, [0, 1], m)]
    for _ in range(upto):
        out.append(_powmod(ctx, out[-1], ctx.q, m))
    return out


def is_irreducible_generic(f: MonicPoly) -> bool:
    """Rabin's test: f | T^(q^d) - T and gcd(f, T^(q^(d/r)) - T) = 1 for primes r | d."""
    ctx, d, m = f.ctx, f.d, f.low_first()
    if d == 1:
        return True
    xs = _frobenius_powers(f, d)
    if _sub(ctx, xs[d], _rem(ctx, [0, 1], m)):
        return False
    for r in factorize(d):
        g = _gcd(ctx, m, _sub(ctx, xs[d // r], [0, 1]))
        if len(g) > 1:
            return False
    return True


def is_irreducible(f: MonicPoly, method: str = "auto") -> bool:
    """``auto`` uses the root test for d <= 3 and Rabin's test beyond."""
    if f.d == 1:
        return True
    if method == "roots" or (method == "auto" and f.d <= 3):
        if f.d > 3:
            raise ValueError("root test decides irreducibility only for d <= 3")
        return not _has_root(f)
    if method in ("auto", "generic"):
        return is_irreducible_generic(f)
    raise ValueError(f"unknown method {method!r}")


# -- minimal polynomials --------------------------------------------------

def frobenius_orbit(big: FieldCtx, x: int, q: int) -> list[int]:
    orbit = [x]
    y = big._pow(x, q)
    while y != x:
        orbit.append(y)
        y = big._pow(y, q)
    return orbit


def minimal_polynomial(big: FieldCtx, emb: Embedding, x) -> tuple[int, MonicPoly]:
    """Degree and minimal polynomial over ``emb.small`` of x in ``big``."""
    small = emb.small
    if emb.big != big:
        raise ValueError("embedding target differs from the given field")
    orbit = frobenius_orbit(big, int(x), small.q)
    prod = [1]
    for r in orbit:
        prod = _mul(big, prod, [big._neg(r), 1])
    coeffs = []
    for c in reversed(prod[:-1]):
        pre = emb.preimage(c)
        if pre is None:
            raise AssertionError(f"minimal polynomial coefficient {c} outside the subfield")
        coeffs.append(pre.idx)
    return len(orbit), MonicPoly(small, tuple(coeffs))
