"""Finite fields F_{p^e} with canonical element indexing.

An element is stored as its coefficient vector (c_0, ..., c_{e-1}) in the
power basis of the canonical modulus, and addressed by the integer index
``sum(c_i * p**i)``. Index 0 is zero and index 1 is one; indices below ``p``
are the prime subfield.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels

DEFAULT_MAX_ELEMENTS = 1 << 25
TABLE_MAX = 1024  # full q x q add/mul tables are built only up to this order


class FieldSizeError(ValueError):
    """Requested field or enumeration exceeds the configured size bound."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class PrimePower:
    p: int
    e: int
    q: int = field(init=False)

    def __post_init__(self):
        if self.e < 1:
            raise ValueError(f"exponent must be positive, got {self.e}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        object.__setattr__(self, "q", self.p ** self.e)

    @classmethod
    def from_q(cls, q: int) -> "PrimePower":
        fac = factorize(q) if q > 1 else {}
        if len(fac) != 1:
            raise ValueError(f"{q} is not a prime power")
        (p, e), = fac.items()
        return cls(p, e)


def is_prime_power(n: int) -> bool:
    return n > 1 and len(factorize(n)) == 1


def prime_powers_up_to(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if is_prime_power(q)]


class FieldCtx:
    """The field F_{p^e} = F_p[x]/(modulus).

    Public arithmetic methods accept elements or plain indices and return
    :class:`FqElem`. The underscored ``_add``/``_mul``/... variants work on
    and return plain ``int`` indices and are what the other modules use in
    their loops.
    """

    def __init__(self, pp: PrimePower, modulus: tuple[int, ...]):
        self.pp = pp
        self.p = pp.p
        self.e = pp.e
        self.q = pp.q
        # low coefficients c_0..c_{e-1}; the x^e coefficient is an implicit 1
        self.modulus = tuple(modulus)
        self._mod_arr = np.array(self.modulus if self.e > 1 else (0,), dtype=np.int64)
        self._tables = None

    # -- identity -------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.p, self.modulus, self.e) == (
            other.p, other.modulus, other.e)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}) mod {format_fp_poly(self.modulus + (1,))}"

    # -- element construction ------------------------------------------
    def __call__(self, value) -> "FqElem":
        if isinstance(value, FqElem):
            if value.ctx != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            value = int(value)
            if not 0 <= value < self.q:
                raise ValueError(f"index {value} out of range for {self!r}")
            return FqElem(self, value)
        return FqElem(self, self.index(value))

    def index(self, coeffs: Sequence[int]) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.e:
            raise ValueError(f"expected at most {self.e} coefficients")
        idx = 0
        for c in reversed(coeffs):
            idx = idx * self.p + (c % self.p)
        return idx

    def coeffs(self, idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.e):
            out.append(idx % self.p)
            idx //= self.p
        return tuple(out)

    @property
    def zero(self) -> "FqElem":
        return FqElem(self, 0)

    @property
    def one(self) -> "FqElem":
        return FqElem(self, 1)

    def enumerate(self) -> list["FqElem"]:
        return [FqElem(self, i) for i in range(self.q)]

    # -- int-level arithmetic -------------------------------------------
    def _add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        idx, scale = 0, 1
        while a or b:
            idx += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return idx

    def _neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        idx, scale = 0, 1
        while a:
            idx += ((-(a % p)) % p) * scale
            a //= p
            scale *= p
        return idx

    def _sub(self, a: int, b: int) -> int:
        return self._add(a, self._neg(b))

    def _mul(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        if e == 1:
            return a * b % p
        if a == 0 or b == 0:
            return 0
        da, db = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        mod = self.modulus
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(e):
                    prod[k - e + i] -= c * mod[i]
        idx = 0
        for c in reversed(prod[:e]):
            idx = idx * p + c % p
        return idx

    def _pow(self, a: int, n: int) -> int:
        if n < 0:
            raise ValueError("negative exponent; use inv")
        result = 1
        base = a
        while n:
            if n & 1:
                result = self._mul(result, base)
            n >>= 1
            if n:
                base = self._mul(base, base)
        return result

    def _inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.e == 1:
            return pow(a, -1, self.p)
        return self._pow(a, self.q - 2)

    def _frobenius(self, a: int, k: int = 1) -> int:
        return self._pow(a, self.p ** (k % self.e))

    def _is_cube(self, h: int) -> bool:
        if h == 0:
            raise ValueError("is_cube is defined on nonzero elements only")
        if (self.q - 1) % 3:
            return True
        return self._pow(h, (self.q - 1) // 3) == 1

    # -- public element-level arithmetic --------------------------------
    def add(self, a, b) -> "FqElem":
        return FqElem(self, self._add(int(a), int(b)))

    def sub(self, a, b) -> "FqElem":
        return FqElem(self, self._sub(int(a), int(b)))

    def neg(self, a) -> "FqElem":
        return FqElem(self, self._neg(int(a)))

    def mul(self, a, b) -> "FqElem":
        return FqElem(self, self._mul(int(a), int(b)))

    def inv(self, a) -> "FqElem":
        return FqElem(self, self._inv(int(a)))

    def pow(self, a, n: int) -> "FqElem":
        return FqElem(self, self._pow(int(a), n))

    def frobenius(self, a, k: int = 1) -> "FqElem":
        """x -> x^(p^k)."""
        if k < 0:
            raise ValueError("k must be non-negative")
        return FqElem(self, self._frobenius(int(a), k))

    def is_cube(self, h) -> bool:
        return self._is_cube(int(h))

    # -- vectorised helpers ----------------------------------------------
    def vmul(self, a, b) -> np.ndarray:
        return kernels.field_mul(a, b, self.p, self.e, self._mod_arr)

    def vadd(self, a, b) -> np.ndarray:
        return kernels.field_add(a, b, self.p, self.e)

    def vneg(self, a) -> np.ndarray:
        return kernels.field_neg(a, self.p, self.e)

    def roots_of(self, coeffs: Sequence[int], first_only: bool = False) -> list[int]:
        """Indices of all roots (ascending) of the polynomial with coefficient
        indices ``coeffs`` (leading first), by exhaustive search."""
        return kernels.poly_roots(list(coeffs), self.p, self.e, self._mod_arr, first_only).tolist()

    def tables(self) -> dict[str, np.ndarray]:
        """q x q addition/multiplication tables (built once, read-only)."""
        if self._tables is None:
            if self.q > TABLE_MAX:
                raise FieldSizeError(f"tables limited to q <= {TABLE_MAX}, got q = {self.q}")
            idx = np.arange(self.q, dtype=np.int64)
            A, B = np.meshgrid(idx, idx, indexing="ij")
            add_t = self.vadd(A, B)
            mul_t = self.vmul(A, B)
            neg_t = self.vneg(idx)
            for t in (add_t, mul_t, neg_t):
                t.setflags(write=False)
            self._tables = {"add": add_t, "mul": mul_t, "neg": neg_t}
        return self._tables


@dataclass(frozen=True, eq=False)
class FqElem:
    ctx: FieldCtx
    idx: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.coeffs(self.idx)

    def __int__(self):
        return self.idx

    __index__ = __int__

    def __eq__(self, other):
        if isinstance(other, FqElem):
            return self.ctx == other.ctx and self.idx == other.idx
        if isinstance(other, int):
            return self.idx == other
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.idx))

    def __repr__(self):
        return f"{self.ctx!r}({self.idx})"

    def _other(self, other) -> int:
        if isinstance(other, FqElem):
            if other.ctx != self.ctx:
                raise ValueError("mixed-field arithmetic")
            return other.idx
        if isinstance(other, int):
            return other % self.ctx.p if other >= 0 else self.ctx._neg((-other) % self.ctx.p)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self.ctx.add(self.idx, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self.ctx.sub(self.idx, o)

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self.ctx.sub(o, self.idx)

    def __neg__(self):
        return self.ctx.neg(self.idx)

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self.ctx.mul(self.idx, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self.ctx.mul(self.idx, self.ctx._inv(o))

    def __pow__(self, n: int):
        if n < 0:
            return self.ctx.pow(self.ctx._inv(self.idx), -n)
        return self.ctx.pow(self.idx, n)

    def __bool__(self):
        return self.idx != 0


# -- construction --------------------------------------------------------

def format_fp_poly(coeffs_low_first: Sequence[int], var: str = "x") -> str:
    terms = []
    for k in range(len(coeffs_low_first) - 1, -1, -1):
        c = coeffs_low_first[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms) or "0"


def canonical_modulus(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest (c_0, ..., c_{e-1}) with x^e + sum c_i x^i irreducible over F_p."""
    if e == 1:
        return ()
    from .polyring import MonicPoly, is_irreducible

    base = make_field(p, 1)
    for low in itertools.product(range(p), repeat=e):
        if low[0] == 0:
            continue  # divisible by x
        # MonicPoly stores a_1..a_e (leading first), i.e. c_{e-1}..c_0
        if is_irreducible(MonicPoly(base, tuple(reversed(low)))):
            return tuple(low)
    raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")


_FIELD_CACHE: dict[tuple, FieldCtx] = {}


def make_field(p: int, e: int = 1, modulus: Iterable[int] | None = None,
               max_elements: int = DEFAULT_MAX_ELEMENTS) -> FieldCtx:
    """Canonical context for F_{p^e}; ``modulus`` overrides the canonical choice.

    Raises ``ValueError`` for a non-prime ``p`` and :class:`FieldSizeError` when
    ``p**e`` exceeds ``max_elements``.
    """
    pp = PrimePower(p, e)
    if pp.q > max_elements:
        raise FieldSizeError(f"F_{p}^{e} has {pp.q} elements, bound is {max_elements}")
    if modulus is not None:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != e or e == 1:
            raise ValueError(f"alternate modulus must give {e} low coefficients (e > 1)")
        from .polyring import MonicPoly, is_irreducible
        if not is_irreducible(MonicPoly(make_field(p, 1), tuple(reversed(modulus)))):
            raise ValueError(f"x^{e} + {format_fp_poly(modulus)} is reducible over F_{p}")
    key = (p, e, modulus)
    ctx = _FIELD_CACHE.get(key)
    if ctx is None:
        ctx = FieldCtx(pp, modulus if modulus is not None else canonical_modulus(p, e))
        _FIELD_CACHE[key] = ctx
    return ctx


def field_of_order(q: int, max_elements: int = DEFAULT_MAX_ELEMENTS) -> FieldCtx:
    pp = PrimePower.from_q(q)
    return make_field(pp.p, pp.e, max_elements=max_elements)


# -- subfield embeddings ---------------------------------------------------

@dataclass(frozen=True, eq=False)
class Embedding:
    """Ring embedding small -> big, with the partial inverse on its image."""

    small: FieldCtx
    big: FieldCtx
    root: int  # image of the generator x of ``small``
    table: np.ndarray
    _inverse: dict

    def __call__(self, x) -> FqElem:
        return FqElem(self.big, int(self.table[int(x)]))

    def preimage(self, y) -> FqElem | None:
        i = self._inverse.get(int(y))
        return None if i is None else FqElem(self.small, i)

    def image(self) -> list[int]:
        return sorted(self._inverse)


def embed(small: FieldCtx, big: FieldCtx) -> Embedding:
    """Embed ``small`` into ``big`` sending x to the least-index root of small.modulus."""
    if small.p != big.p or big.e % small.e:
        raise ValueError(f"cannot embed {small!r} into {big!r}")
    if small.e == 1:
        root = 1
        table = np.arange(small.p, dtype=np.int64)
    else:
        # the modulus has F_p coefficients, which have the same index in big
        roots = big.roots_of((1,) + tuple(reversed(small.modulus)), first_only=True)
        root = roots[0]
        powers = [1]
        for _ in range(small.e - 1):
            powers.append(big._mul(powers[-1], root))
        table = np.zeros(small.q, dtype=np.int64)
        for i in range(small.q):
            acc = 0
            for c, pw in zip(small.coeffs(i), powers):
                if c:
                    acc = big._add(acc, big._mul(c, pw))
            table[i] = acc
    table.setflags(write=False)
    inverse = {int(v): i for i, v in enumerate(table.tolist())}
    return Embedding(small, big, int(root), table, inverse)
