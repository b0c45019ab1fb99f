"""Brute-force oracle: enumerate genus-2 double covers as function fields.

Every genus-2 curve mapping 2-to-1 onto E arises as w^2 = g for some g in
the Riemann-Roch space of 4*O, i.e. g = u(x) + v*y with deg u <= 2 and v a
scalar (a pole-order argument plus translation by 2-torsion classes shows
nothing outside that space produces new covers).  The cover has genus 2
exactly when the branch divisor of the quadratic extension has degree 2, a
condition read off the squarefree decomposition of the norm u^2 - v^2*f
without ever constructing the extension.

For survivors, the degree-1 places of the extension are counted directly:
each rational point of E contributes 2, 1 or 0 places according to the
square class of the local unit of g (a short power-series expansion at the
finitely many zeros of g).  The complementary trace is then

    a' = q + 1 - #places - trace(E)

and the oracle's answer is the set of a' over all covers.  No isogeny
theory enters: this route double-checks both the closed-form candidates and
the 2-torsion gluing criterion from first principles.

A second, slower route to the same branch data is also exposed: factor the
norm into irreducibles, realize every place above every factor with an
explicit point over the right extension field, and read valuations off
local expansions (divisor_odd_part).  The fast path and the divisor route
are kept deliberately independent so each can check the other.
"""

from __future__ import annotations

from .ffield import (
    Polynomial,
    embedding,
    factor,
    is_square,
    make_field,
    roots,
    sqrt,
    squarefree_decomposition,
)
from .ecurve import FieldTooLarge
from .classify import LambdaSet

# truncation order for local expansions: g has at most 4 zeros, so every
# needed valuation sits strictly below this
SERIES_PRECISION = 6

# enumeration is cubic in q and the residue-field towers stay single-layer
# only over a prime field, so the oracle stops here; larger and non-prime
# fields are served by the other two routes
ORACLE_MAX_Q = 13


class ZeroFunction(ValueError):
    """Raised for the zero function, which has no divisor."""


class NotGenusTwo(ValueError):
    """Raised when a cover expected to have genus 2 does not."""


class ZetaInconsistent(RuntimeError):
    """Point counts contradicting the Weil polynomial; a bug if ever seen."""


def _series_mul(a, b, zero):
    n = len(a)
    out = [zero] * n
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j in range(n - i):
            bj = b[j]
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return out


def _series_sqrt_one(t, field):
    """Square root of a unit series with constant term 1 (char > 2)."""
    n = len(t)
    half = field.element(2).inverse()
    s = [field.one] + [field.zero] * (n - 1)
    for k in range(1, n):
        acc = t[k]
        for i in range(1, k):
            acc = acc - s[i] * s[k - i]
        s[k] = acc * half
    return s


def _point_series(a, b, x0, y0, n):
    """Series for (x, y) in the local parameter at a point of y^2 = x^3+ax+b.

    The coefficients a, b and the point must live in one field.  At a smooth
    point the parameter is x - x0 and y = y0*sqrt(f(x)/f(x0)) on the chosen
    branch; at a 2-torsion point the parameter is y and x - x0 solves
    f(x0 + s) = y^2 by a fixed-point iteration that gains two orders of
    precision per pass.
    """
    field = x0.field
    zero, one = field.zero, field.one
    if not y0.is_zero():
        xs = [x0, one] + [zero] * (n - 2)
        x2 = _series_mul(xs, xs, zero)
        x3 = _series_mul(x2, xs, zero)
        fs = [x3[i] + a * xs[i] for i in range(n)]
        fs[0] = fs[0] + b
        inv = (y0 * y0).inverse()
        ys = [y0 * c for c in _series_sqrt_one([c * inv for c in fs], field)]
    else:
        fp = (field.element(3) * x0 * x0 + a).inverse()
        three_x0 = field.element(3) * x0
        s = [zero] * n
        for _ in range(n // 2 + 1):
            s2 = _series_mul(s, s, zero)
            s3 = _series_mul(s2, s, zero)
            s = [(-three_x0 * s2[i] - s3[i]) * fp for i in range(n)]
            s[2] = s[2] + fp
        xs = [x0 + s[0]] + s[1:]
        ys = [zero, one] + [zero] * (n - 2)
    return xs, ys


def _g_series_at_point(curve, ucoeffs, v, x0, y0):
    """Expansion of g = u(x) + v*y in the local parameter at (x0, y0)."""
    n = SERIES_PRECISION
    zero = curve.field.zero
    u0, u1, u2 = ucoeffs
    xs, ys = _point_series(curve.a, curve.b, x0, y0, n)
    x2 = _series_mul(xs, xs, zero)
    gs = [u1 * xs[i] + u2 * x2[i] + v * ys[i] for i in range(n)]
    gs[0] = gs[0] + u0
    return gs


def _local_unit(curve, ucoeffs, v, x0, y0):
    """(valuation, unit value) of g at a zero on the curve."""
    for w, c in enumerate(_g_series_at_point(curve, ucoeffs, v, x0, y0)):
        if not c.is_zero():
            return w, c
    raise AssertionError("zero of unexpected multiplicity")


def _cubic(curve):
    field = curve.field
    return Polynomial(field, [curve.b, curve.a, field.zero, field.one])


def _as_poly(field, value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (tuple, list)):
        return Polynomial(field, list(value))
    return Polynomial(field, [value])


class EllipticFunction:
    """A function u(x) + v(x)*y on the curve with poles only at infinity.

    x and y have pole orders 2 and 3 there, so capping deg u at 3 and deg v
    at 1 covers every pole order up to 6.  The cover search itself only ever
    needs deg u <= 2 with constant v (pole order at most 4).
    """

    __slots__ = ("curve", "u", "v")

    def __init__(self, curve, u, v):
        field = curve.field
        self.curve = curve
        self.u = _as_poly(field, u)
        self.v = _as_poly(field, v)
        if self.u.is_zero() and self.v.is_zero():
            raise ZeroFunction("the zero function has no divisor")
        if self.u.degree() > 3 or self.v.degree() > 1:
            raise ValueError("pole order above 6 is never needed")

    def pole_order(self):
        # the two candidate orders have opposite parity: no cancellation
        orders = []
        if not self.u.is_zero():
            orders.append(2 * self.u.degree())
        if not self.v.is_zero():
            orders.append(2 * self.v.degree() + 3)
        return max(orders)

    def norm(self):
        """Product with the conjugate u - v*y, as a polynomial in x."""
        vv = self.v * self.v
        return self.u * self.u - vv * _cubic(self.curve)

    def __repr__(self):
        return f"EllipticFunction(u={self.u!r}, v={self.v!r})"


def _as_function(curve, g):
    if isinstance(g, EllipticFunction):
        return g
    u, v = g
    return EllipticFunction(curve, u, v)


def rr_basis(curve, n):
    """Monomial basis of the functions with pole order at most n at infinity.

    {x^i : 2i <= n} plus {x^i*y : 2i + 3 <= n}, listed by pole order; the
    count is exactly n for n >= 1.
    """
    if not 1 <= n <= 6:
        raise ValueError("pole order bound must lie in 1..6")
    basis = []
    for i in range(n // 2 + 1):
        basis.append(EllipticFunction(curve, [0] * i + [1], 0))
    for i in range((n - 3) // 2 + 1):
        basis.append(EllipticFunction(curve, 0, [0] * i + [1]))
    basis.sort(key=EllipticFunction.pole_order)
    return basis


def norm_polynomial(curve, g):
    """Norm of g = u + v*y down to F_q(x): u^2 - v^2*(x^3 + ax + b).

    Its roots are exactly the x-coordinates of the finite zeros of g.
    """
    return _as_function(curve, g).norm()


class PlaceOnE:
    """A closed point of the curve: infinity, or a place above a monic
    irreducible h(x) tagged by how y behaves in the residue field."""

    __slots__ = ("minpoly", "kind", "degree", "point", "lift")

    def __init__(self, minpoly, kind, degree, point, lift):
        self.minpoly = minpoly
        self.kind = kind
        self.degree = degree
        self.point = point
        self.lift = lift

    def __repr__(self):
        if self.kind == "infinite":
            return "PlaceOnE(infinite)"
        return f"PlaceOnE({self.minpoly!r}, {self.kind}, degree={self.degree})"


INFINITE_PLACE = PlaceOnE(None, "infinite", 1, None, None)


def places_above(curve, h):
    """The places of the curve over a monic irreducible h(x).

    Two split places, one ramified place (h divides the curve cubic), or one
    inert place of doubled residue degree; each comes with a realized point
    over the matching extension field and the lift map from the base field.
    """
    field = curve.field
    d = h.degree()
    assert d >= 1 and h.leading() == field.one
    if d == 1:
        lift = _identity
        x0 = -h.coeffs[0]
    else:
        ext = make_field(field.p, field.m * d)
        lift = embedding(field, ext)
        x0 = roots(Polynomial(ext, [lift(c) for c in h.coeffs]))[0]
    fval = lift(curve.b) + x0 * (lift(curve.a) + x0 * x0)
    if fval.is_zero():
        return [PlaceOnE(h, "ramified-2-torsion", d, (x0, fval), lift)]
    if is_square(fval):
        y0 = sqrt(fval)
        return [
            PlaceOnE(h, "split-plus", d, (x0, y0), lift),
            PlaceOnE(h, "split-minus", d, (x0, -y0), lift),
        ]
    big = make_field(field.p, field.m * d * 2)
    up = embedding(x0.field, big)
    return [PlaceOnE(h, "inert", 2 * d, (up(x0), sqrt(up(fval))), _Compose(up, lift))]


def _identity(c):
    return c


class _Compose:
    __slots__ = ("outer", "inner")

    def __init__(self, outer, inner):
        self.outer = outer
        self.inner = inner

    def __call__(self, c):
        return self.outer(self.inner(c))


def _poly_series(poly, powers, lift, zero, n):
    out = [zero] * n
    for i, c in enumerate(poly.coeffs):
        if c.is_zero():
            continue
        c = lift(c)
        if i == 0:
            out[0] = out[0] + c
        else:
            pw = powers[i]
            for j in range(n):
                out[j] = out[j] + c * pw[j]
    return out


def _function_series(func, place, n):
    """Expansion of u(x) + v(x)*y in the local parameter at a finite place."""
    curve = func.curve
    lift = place.lift
    x0, y0 = place.point
    zero = x0.field.zero
    xs, ys = _point_series(lift(curve.a), lift(curve.b), x0, y0, n)
    x2 = _series_mul(xs, xs, zero)
    powers = (None, xs, x2, _series_mul(x2, xs, zero))
    us = _poly_series(func.u, powers, lift, zero, n)
    vy = _series_mul(_poly_series(func.v, powers, lift, zero, n), ys, zero)
    return [us[i] + vy[i] for i in range(n)]


def local_valuation(curve, g, place):
    """Valuation of g at the place.

    Minus the pole order at infinity; elsewhere the order of vanishing of
    the local expansion at the realized point, to precision deg(norm) + 3
    (always enough: the valuation is bounded by the norm degree).
    """
    func = _as_function(curve, g)
    if place.kind == "infinite":
        return -func.pole_order()
    precision = func.norm().degree() + 3
    for w, c in enumerate(_function_series(func, place, precision)):
        if not c.is_zero():
            return w
    raise AssertionError("local expansion vanished to its full precision")


class DivisorSketch:
    """Divisor of a nonzero function as (place, valuation) pairs.

    Zero valuations are dropped; the total degree must come out 0 and the
    odd part must have even degree, both checked at construction.
    """

    __slots__ = ("entries", "odd_places")

    def __init__(self, entries):
        self.entries = tuple((p, w) for p, w in entries if w != 0)
        assert sum(p.degree * w for p, w in self.entries) == 0
        self.odd_places = tuple(p for p, w in self.entries if w % 2 != 0)
        assert self.odd_degree() % 2 == 0

    def odd_degree(self):
        return sum(p.degree for p in self.odd_places)


def divisor_odd_part(curve, g):
    """Divisor of g computed place by place, with its odd part.

    A deliberately independent second route to the branch data: the norm is
    factored into irreducibles, every place above every factor is expanded
    locally, and the odd part collects the places of odd valuation; these
    are exactly the branch places of w^2 = g, infinity included, so the
    odd-part degree must agree with branch_degree.
    """
    func = _as_function(curve, g)
    entries = [(INFINITE_PLACE, -func.pole_order())]
    for h, _ in factor(func.norm()):
        for place in places_above(curve, h):
            entries.append((place, local_valuation(curve, func, place)))
    return DivisorSketch(entries)


def _inert_degree(rest, cubic):
    """Total degree of the places of rest staying prime in the cover by E.

    rest is squarefree, coprime to the curve cubic, of degree at most 2: its
    prime factors are read off directly instead of running a general
    factorization.
    """
    field = rest.field
    assert rest.degree() <= 2
    linear = roots(rest)
    total = sum(1 for r in linear if not is_square(cubic.evaluate(r)))
    if rest.degree() == 2 and not linear:
        ext = make_field(field.p, 2 * field.m)
        lift = embedding(field, ext)
        quad = Polynomial(ext, [lift(c) for c in rest.coeffs])
        r = roots(quad)[0]
        value = lift(cubic.coeffs[0]) + r * (lift(cubic.coeffs[1]) + r * r)
        if not is_square(value):
            total += 2
    return total


def branch_degree(curve, u, v):
    """Degree of the branch divisor of w^2 = u(x) + v*y over the curve.

    Computed from the squarefree decomposition of the norm u^2 - v^2*f: a
    prime of multiplicity w ramifies in the quadratic extension exactly when
    the local valuation of g is odd, which depends only on w mod 4 and on how
    the prime behaves under the cover by E (ramified at a root of f, split
    when f is a square in its residue field, inert otherwise).
    """
    field = curve.field
    if isinstance(v, int):
        v = field.element(v)
    if isinstance(u, Polynomial):
        upoly = u
    else:
        upoly = Polynomial(field, list(u))
    assert upoly.degree() <= 2
    cubic = _cubic(curve)
    vv = v * v
    norm = upoly * upoly - Polynomial(field, [c * vv for c in cubic.coeffs])
    assert not norm.is_zero(), "u^2 = v^2 f is impossible for nonsingular f"
    total = 1 if not v.is_zero() and upoly.degree() < 2 else 0
    for part, mult in squarefree_decomposition(norm):
        if mult % 2 == 1:
            # odd valuation upstairs at every prime of the part
            total += part.degree()
        elif mult % 4 == 2:
            rest = part // part.gcd(cubic)
            if rest.degree() == 0:
                continue
            if v.is_zero():
                total += 2 * rest.degree()
            else:
                total += 2 * _inert_degree(rest, cubic)
    return total


def _count_places(curve, points, sqtable, ucoeffs, v):
    u0, u1, u2 = ucoeffs
    if not v.is_zero() and u2.is_zero():
        total = 1  # odd pole order at infinity: a single ramified place
    else:
        # even order at infinity: the unit there is the leading coefficient
        lead = u2 if not u2.is_zero() else (u1 if not u1.is_zero() else u0)
        total = 2 if lead.index in sqtable else 0
    for x0, y0 in points:
        val = u0 + x0 * (u1 + x0 * u2) + v * y0
        if not val.is_zero():
            if val.index in sqtable:
                total += 2
        else:
            w, unit = _local_unit(curve, ucoeffs, v, x0, y0)
            if w % 2 == 1:
                total += 1
            elif unit.index in sqtable:
                total += 2
    return total


def cover_point_count(curve, u, v, k=1):
    """Rational-place count of the cover w^2 = u(x) + v*y over F_{q^k}."""
    ucoeffs = _as_triple(curve.field, u)
    if isinstance(v, int):
        v = curve.field.element(v)
    if k == 1:
        ext, ecoeffs, ev = curve, ucoeffs, v
    else:
        ext = curve.base_change(k)
        lift = embedding(curve.field, ext.field)
        ecoeffs = tuple(lift(c) for c in ucoeffs)
        ev = lift(v)
    return _count_places(
        ext, ext.affine_points(), ext.field.squares_table(), ecoeffs, ev
    )


def cover_complementary_trace(curve, u, v):
    """Trace of the complement: q + 1 - #places of the cover - trace(E).

    The value is checked before release: the cover must have branch degree
    2, the trace must sit in the Hasse window, and the count over the
    quadratic extension must match the degree-4 Weil polynomial.  Raises
    NotGenusTwo for the wrong branch degree and ZetaInconsistent if a check
    fails (which would mean a counting bug, never bad input).
    """
    field = curve.field
    ucoeffs = _as_triple(field, u)
    if isinstance(v, int):
        v = field.element(v)
    if branch_degree(curve, ucoeffs, v) != 2:
        raise NotGenusTwo("the branch divisor does not have degree 2")
    q = field.order
    a = curve.trace()
    ap = q + 1 - cover_point_count(curve, ucoeffs, v) - a
    n2 = cover_point_count(curve, ucoeffs, v, k=2)
    if ap * ap > 4 * q or n2 != q * q + 1 - (a * a - 2 * q) - (ap * ap - 2 * q):
        raise ZetaInconsistent(f"counts for u={ucoeffs}, v={v} break the zeta identity")
    return ap


def _as_triple(field, u):
    if isinstance(u, Polynomial):
        coeffs = list(u.coeffs)
    else:
        coeffs = [field.element(c) for c in u]
    assert len(coeffs) <= 3
    while len(coeffs) < 3:
        coeffs.append(field.zero)
    return tuple(coeffs)


def cover_representatives(field):
    """Generators of the quadratic extensions, one per square-scaling class.

    Scaling g by a square changes nothing, so v is pinned to 0, 1 or the
    canonical nonsquare, and for v = 0 the polynomial u is monic up to that
    same nonsquare.  Constants are skipped (they give the trivial cover).
    """
    zero, one = field.zero, field.one
    nu = field.nonsquare()
    elems = tuple(field.elements())
    for scale in (one, nu):
        for c0 in elems:
            yield (c0 * scale, scale, zero), zero
        for c0 in elems:
            for c1 in elems:
                yield (c0 * scale, c1 * scale, scale), zero
    for v in (one, nu):
        for u0 in elems:
            for u1 in elems:
                for u2 in elems:
                    yield (u0, u1, u2), v


def cover_census(curve):
    """Complementary-trace histogram over all genus-2 double covers."""
    field = curve.field
    points = curve.affine_points()
    sqtable = field.squares_table()
    base = field.order + 1 - curve.trace()
    counts = {}
    for ucoeffs, v in cover_representatives(field):
        if branch_degree(curve, ucoeffs, v) != 2:
            continue
        ap = base - _count_places(curve, points, sqtable, ucoeffs, v)
        counts[ap] = counts.get(ap, 0) + 1
    return counts


def lambda_oracle(curve):
    """Complementary-trace set computed by exhaustive cover enumeration."""
    field = curve.field
    if field.m != 1 or field.order > ORACLE_MAX_Q:
        raise FieldTooLarge(
            f"cover enumeration is limited to prime fields of order"
            f" at most {ORACLE_MAX_Q}"
        )
    return LambdaSet(curve, 2, sorted(cover_census(curve)), "oracle")
