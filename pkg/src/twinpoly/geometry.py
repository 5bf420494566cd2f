"""Fixed-point counts of twisted Frobenius on the varieties behind pi(d, q; (0, 1)).

Points over the algebraic closure are realised in explicit finite extensions:
F_{q^2} holds i, zeta_3 and the points of Gamma_n; F_{p^(6e)} additionally holds
the cube roots needed on H_n. Special elements are chosen by exhaustive search,
least canonical index first; fixed-point counts do not depend on that choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import closed_form, curve
from .field import FieldCtx, PrimePower, embed, field_of_order, make_field
from .polyring import add_const, is_irreducible, minimal_polynomial

VARIETIES = ("D", "Gamma_2", "Gamma_3", "Gamma_6", "H_2", "H_3")


@lru_cache(maxsize=32)
def _extension(q: int, degree: int) -> tuple[FieldCtx, FieldCtx]:
    """(F_q, F_{q^degree}) as canonical contexts."""
    small = field_of_order(q)
    return small, make_field(small.p, small.e * degree)


@lru_cache(maxsize=32)
def _special(big: FieldCtx, name: str) -> list[int]:
    """Roots, ascending by index, of x^2 + 1 ("i") or x^2 + x + 1 ("zeta3")."""
    poly = {"i": (1, 0, 1), "zeta3": (1, 1, 1)}[name]
    return big.roots_of(poly)


def _zeta3(big: FieldCtx) -> int:
    roots = _special(big, "zeta3")
    # in characteristic 3, x^2 + x + 1 = (x - 1)^2 and zeta_3 = 1
    return roots[0] if big.p != 3 else 1


def _s3_images(big: FieldCtx, lam: int) -> list[int | None]:
    """Images of lam under the six Moebius maps permuting {0, 1, inf}; None for inf."""
    f = big
    one = 1
    inv = lambda x: None if x == 0 else f._inv(x)
    one_minus = f._sub(one, lam)
    return [
        lam,
        inv(one_minus),                                       # 1/(1 - l)
        None if lam == 0 else f._mul(f._sub(lam, one), f._inv(lam)),  # 1 - 1/l
        inv(lam),                                             # 1/l
        one_minus,                                            # 1 - l
        None if lam == one else f._mul(lam, f._inv(f._sub(lam, one))),  # l/(l - 1)
    ]


def _graph_multiplicity(big: FieldCtx, lam: int, mu: int) -> int:
    return sum(1 for img in _s3_images(big, lam) if img == mu)


@dataclass(frozen=True)
class TwistedPoint:
    """A point of D (projective [a:b:z]), Gamma_n ((lam, mu)) or H_n ((xi, lam, mu))."""

    field: FieldCtx
    variety: str
    coords: tuple[int, ...]
    h: int = 1  # twist parameter, as an index of ``field``

    def __post_init__(self):
        f, c = self.field, self.coords
        if self.variety not in VARIETIES:
            raise ValueError(f"unknown variety {self.variety!r}")
        if self.variety == "D":
            a, b, z = c
            if f._add(f._mul(z, z), f._mul(a, b)) != 0 or not any(c):
                raise AssertionError(f"{c} is not on the conic z^2 + ab = 0")
            return
        n = int(self.variety.split("_")[1])
        lam, mu = c[-2:]
        if _graph_multiplicity(f, lam, mu) != n:
            raise AssertionError(f"{(lam, mu)} does not lie on exactly {n} graphs")
        if self.variety.startswith("H"):
            xi = c[0]
            lhs = f._mul(self.h, f._pow(xi, 3))
            rhs = f._mul(f._mul(lam, f._sub(lam, 1)), f._mul(mu, f._sub(1, mu)))
            if lhs != rhs:
                raise AssertionError(f"{c} violates h xi^3 = lam(lam-1) mu(1-mu)")


# -- pi(d, q; (0,1)) = #U_tau(F_q) / d^2 ---------------------------------------

def twisted_pair_count(q: int, d: int) -> int:
    """#U_tau(F_q): d times the number of x in F_{q^d} of degree d whose
    minimal polynomial f has f + 1 irreducible."""
    if d not in (2, 3):
        raise ValueError("twisted_pair_count supports d in {2, 3}")
    small, big = _extension(q, d)
    emb = embed(small, big)
    seen: dict[int, bool] = {}
    hits = 0
    for x in range(big.q):
        k, f = minimal_polynomial(big, emb, x)
        if k != d:
            continue
        ok = seen.get(f.index)
        if ok is None:
            ok = seen[f.index] = is_irreducible(add_const(f, 1))
        hits += ok
    return d * hits


# -- d = 2: the divisor D on the conic -----------------------------------

def _projectively_equal(f: FieldCtx, P, Q) -> bool:
    for i in range(3):
        for j in range(i + 1, 3):
            if f._mul(P[i], Q[j]) != f._mul(P[j], Q[i]):
                return False
    return True


def divisor_points(q: int) -> list[TwistedPoint]:
    """The points of D in coordinates [a:b:z] over F_{q^2}."""
    _, big = _extension(q, 2)
    neg = big._neg
    pts = [(0, 1, 0), (1, 0, 0)]
    if big.p == 2:
        pts.append((1, 1, 1))
    else:
        i = _special(big, "i")[0]
        m1 = neg(1)
        pts += [(1, 1, i), (m1, m1, i), (1, m1, 1), (m1, 1, 1)]
    return [TwistedPoint(big, "D", P) for P in pts]


def d2_divisor_fixed(q: int) -> int:
    """#D_tau(F_q): points of D fixed by tau F, tau: (a, b, z) -> (-a, -b, z)."""
    PrimePower.from_q(q)
    pts = divisor_points(q)
    f = pts[0].field
    fixed = 0
    for P in pts:
        a, b, z = (f._pow(c, q) for c in P.coords)
        image = (f._neg(a), f._neg(b), z)
        fixed += _projectively_equal(f, image, P.coords)
    return fixed


# -- Gamma_n and H_n -------------------------------------------------------

def gamma_points(q: int, n: int, big: FieldCtx | None = None) -> list[TwistedPoint]:
    """Gamma_n as (lam, mu) pairs in F_{q^2} (or in ``big`` if given)."""
    pp = PrimePower.from_q(q)
    if big is None:
        _, big = _extension(q, 2)
    p = pp.p
    if n == 2:
        if p in (2, 3):
            return []
        vals = [big._neg(1), big._inv(2), 2]
    elif n == 3:
        if p == 3:
            return []
        z = _zeta3(big)
        vals = [big._neg(z), big._neg(big._mul(z, z))]
    elif n == 6:
        if p != 3:
            return []
        m1 = big._neg(1)
        return [TwistedPoint(big, "Gamma_6", (m1, m1))]
    else:
        return []
    return [TwistedPoint(big, f"Gamma_{n}", (lam, mu)) for lam in vals for mu in vals]


def _tau_on_lambda(f: FieldCtx, lam: int) -> int:
    return f._inv(f._sub(1, lam))


def gamma_fixed(q: int, n: int) -> int:
    """Fixed points of (lam, mu) -> (1/(1 - lam^q), mu^q) on Gamma_n."""
    fixed = 0
    for P in gamma_points(q, n):
        f = P.field
        lam, mu = P.coords
        image = (_tau_on_lambda(f, f._pow(lam, q)), f._pow(mu, q))
        fixed += image == P.coords
    return fixed


def h_points(q: int, h, n: int) -> list[TwistedPoint]:
    """H_{n,h} over F_{p^(6e)}: the cube roots xi over each point of Gamma_n."""
    small, big = _extension(q, 6)
    if small.p == 3:
        raise ValueError("H_n is described here only for p != 3")
    if n not in (2, 3):
        raise ValueError("n must be 2 or 3")
    h = int(h)
    if h == 0:
        raise ValueError("twist parameter must be nonzero")
    hb = int(embed(small, big)(h))
    pts = []
    for G in gamma_points(q, n, big):
        lam, mu = G.coords
        rhs = big._mul(big._mul(lam, big._sub(lam, 1)), big._mul(mu, big._sub(1, mu)))
        target = big._mul(rhs, big._inv(hb))
        # one root by search, the other two by multiplying with zeta_3
        xi = big.roots_of((1, 0, 0, big._neg(target)), first_only=True)[0]
        z = _zeta3(big)
        for xi_k in (xi, big._mul(xi, z), big._mul(xi, big._mul(z, z))):
            pts.append(TwistedPoint(big, f"H_{n}", (xi_k, lam, mu), hb))
    return pts


def h_n_fixed(q: int, h, n: int) -> int:
    """Fixed points of tau F on H_{n,h}, tau (xi, lam, mu) = (xi/(lam - 1), 1/(1 - lam), mu)."""
    fixed = 0
    for P in h_points(q, h, n):
        f = P.field
        xi, lam, mu = (f._pow(c, q) for c in P.coords)
        image = (f._mul(xi, f._inv(f._sub(lam, 1))), _tau_on_lambda(f, lam), mu)
        fixed += image == P.coords
    return fixed


# -- assembled traces --------------------------------------------------------

def _chi_minus3(q: int) -> int:
    return 1 if q % 3 == 1 else -1


def trace_u(q: int) -> int:
    """tr(tau F | H*_c(U)) as an integer; equals 9 * pi3(q)."""
    pp = PrimePower.from_q(q)
    if pp.p == 3:
        value = q * (q * q - q - 3)
    else:
        a = curve.trace_a(field_of_order(q), 1)
        value = q ** 3 + q * a * a - q * q * (2 + _chi_minus3(q)) - 2 * q
    expected = 9 * closed_form.pi3(q)
    if value != expected:
        raise AssertionError(f"trace_u({q}) = {value} but 9*pi3 = {expected}")
    return value


def trace_exe_twisted(q: int, h) -> int:
    """tr(tau F | H*_c(E x E_h)^mu3) for p != 3, as an integer."""
    ctx = field_of_order(q)
    if ctx.p == 3:
        raise ValueError("p = 3 has no elliptic factor")
    base = (1 + q) ** 2
    if q % 3 == 2:
        return base
    a = curve.trace_a(ctx, 1)
    if ctx._is_cube(int(h)):
        return base + a * a - 2 * q
    return base + a * curve.trace_a(ctx, h) + q


def trace_u_twisted(q: int, h, h3_fixed: int | None = None) -> int:
    """q * (tr on (E x E_h)^mu3 - tr on H_{3,h} - 3(1 + q)); the H_{3,h} term is
    counted by :func:`h_n_fixed` unless supplied."""
    if h3_fixed is None:
        h3_fixed = h_n_fixed(q, h, 3)
    return q * (trace_exe_twisted(q, h) - h3_fixed - 3 * (1 + q))
