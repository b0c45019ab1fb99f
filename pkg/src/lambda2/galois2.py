"""Two-torsion of an elliptic curve as a Galois module, and gluing tests.

The nonzero 2-torsion points of y^2 = x^3 + a*x + b sit over the roots of the
cubic x^3 + a*x + b, so the Galois action is the q-power Frobenius permuting
those roots inside their splitting field.  Everything here is phrased through
that three-element root set:

* module_isomorphisms: Frobenius-equivariant bijections between the root sets
  of two curves (every bijection of nonzero elements extends to a group
  isomorphism of the Klein four-groups, so bijections are the right objects);
* scaling_set / geometric_restrictions: the x-scalings u^2 coming from
  geometric isomorphisms E -> E', and the root bijections they induce;
* kani_admissible: whether some equivariant isomorphism is NOT such a
  restriction, which is exactly when the two curves can be glued along their
  2-torsion into a genus-2 double cover of each.

Permutations are tuples t of length 3 with t[i] = j meaning "root i of the
first curve maps to root j of the second", with roots in canonical order.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .ffield import Polynomial, embedding, factor, make_field, roots
from .ecurve import add_points

STRUCTURES = ("Full", "C2", "Trivial")

_STRUCTURE_BY_DEGREES = {(1, 1, 1): "Full", (1, 2): "C2", (3,): "Trivial"}


class TwoTorsionModule:
    """Root data of the 2-division cubic: splitting field, roots, Frobenius.

    structure is "Full" (all three roots rational, Frobenius trivial), "C2"
    (one rational root, Frobenius swaps the conjugate pair) or "Trivial" (no
    rational root, Frobenius is a 3-cycle).
    """

    __slots__ = (
        "curve",
        "field",
        "extension_curve",
        "splitting_degree",
        "roots",
        "frobenius",
        "structure",
    )

    def __init__(self, curve):
        base = curve.field
        cubic = Polynomial(base, [curve.b, curve.a, base.zero, base.one])
        degrees = tuple(sorted(h.degree() for h, _ in factor(cubic)))
        self.structure = _STRUCTURE_BY_DEGREES[degrees]
        self.splitting_degree = math.lcm(*degrees)
        self.curve = curve
        self.extension_curve = curve.base_change(self.splitting_degree)
        self.field = self.extension_curve.field
        phi = embedding(base, self.field)
        lifted = Polynomial(self.field, [phi(c) for c in cubic.coeffs])
        rts = roots(lifted)
        assert len(rts) == 3 and len(set(rts)) == 3
        self.roots = tuple(rts)
        # q-power Frobenius (q = base field size) as a permutation of root slots
        frob = []
        for r in self.roots:
            image = r.frobenius(base.m)
            frob.append(self.roots.index(image))
        self.frobenius = tuple(frob)
        assert sorted(self.frobenius) == [0, 1, 2]

    def points(self):
        """The 2-torsion subgroup over the splitting field, identity first."""
        zero = self.field.zero
        return [None] + [(r, zero) for r in self.roots]

    def __repr__(self):
        return (
            f"TwoTorsionModule({self.curve!r}: {self.structure}, "
            f"roots over {self.field!r})"
        )


@lru_cache(maxsize=None)
def two_torsion_module(curve):
    return TwoTorsionModule(curve)


def module_isomorphisms(curve1, curve2):
    """All Frobenius-equivariant root bijections, as sorted permutation tuples.

    Empty unless the two structures agree; of size 6, 2, 3 for matching Full,
    C2, Trivial (cosets of the centralizer of the Frobenius in S_3).
    """
    s1 = two_torsion_module(curve1).frobenius
    s2 = two_torsion_module(curve2).frobenius
    out = []
    for tau in itertools.permutations(range(3)):
        if all(tau[s1[i]] == s2[tau[i]] for i in range(3)):
            out.append(tau)
    return tuple(out)


def scaling_set(curve1, curve2):
    """x-scalings u^2 of geometric isomorphisms curve1 -> curve2.

    Returns (field, scalings) where the scalings live in the named extension
    of the common base field, sorted canonically.  Empty exactly when the
    j-invariants differ.  A geometric isomorphism acts by (x, y) ->
    (u^2 x, u^3 y) with u^4 a = a' and u^6 b = b', so:

    * generic j: the single value u^2 = a*b' / (a'*b);
    * j = 1728 (b = b' = 0): the two square roots of a'/a;
    * j = 0 (a = a' = 0): the three cube roots of b'/b.
    """
    base = curve1.field
    if curve1.j_invariant() != curve2.j_invariant():
        return base, ()
    if curve1.a.is_zero():
        target = Polynomial(base, [-(curve2.b / curve1.b), 0, 0, 1])
    elif curve1.b.is_zero():
        target = Polynomial(base, [-(curve2.a / curve1.a), 0, 1])
    else:
        s = (curve1.a * curve2.b) / (curve2.a * curve1.b)
        return base, (s,)
    split_deg = math.lcm(*(h.degree() for h, _ in factor(target)))
    ext = make_field(base.p, base.m * split_deg)
    phi = embedding(base, ext)
    lifted = Polynomial(ext, [phi(c) for c in target.coeffs])
    found = roots(lifted)
    assert len(found) == target.degree()
    return ext, tuple(found)


def geometric_restrictions(curve1, curve2):
    """Root bijections induced by geometric isomorphisms, as sorted tuples.

    Each scaling s sends the root set of curve1 onto that of curve2 inside a
    compositum field; the induced slot permutation is recorded.
    """
    mod1 = two_torsion_module(curve1)
    mod2 = two_torsion_module(curve2)
    sfield, scalings = scaling_set(curve1, curve2)
    if not scalings:
        return ()
    p = curve1.field.p
    big = make_field(p, math.lcm(mod1.field.m, mod2.field.m, sfield.m))
    lift1 = embedding(mod1.field, big)
    lift2 = embedding(mod2.field, big)
    lifts = embedding(sfield, big)
    roots1 = [lift1(r) for r in mod1.roots]
    roots2 = [lift2(r) for r in mod2.roots]
    perms = set()
    for s in scalings:
        sw = lifts(s)
        tau = tuple(roots2.index(sw * r) for r in roots1)
        assert sorted(tau) == [0, 1, 2]
        perms.add(tau)
    return tuple(sorted(perms))


def kani_admissible(curve1, curve2):
    """Whether the curves glue along 2-torsion into a genus-2 double cover.

    True when some equivariant module isomorphism is not the restriction of a
    geometric isomorphism; gluing along a restriction degenerates instead of
    producing a smooth genus-2 curve.
    """
    isos = module_isomorphisms(curve1, curve2)
    if not isos:
        return False
    restricted = set(geometric_restrictions(curve1, curve2))
    return any(tau not in restricted for tau in isos)


def all_isos_are_restrictions(curve1, curve2):
    """Whether every equivariant module isomorphism comes from geometry.

    Vacuously true when no equivariant isomorphism exists at all.  For curves
    sharing a j-invariant and a 2-torsion structure this happens exactly in
    the two rigid cases: j = 0 with Trivial structure, j = 1728 with C2.
    """
    restricted = set(geometric_restrictions(curve1, curve2))
    return all(tau in restricted for tau in module_isomorphisms(curve1, curve2))


def rigidity_closed_form(curve1, curve2):
    """Closed-form prediction for all_isos_are_restrictions: true iff the
    curves share a j-invariant and 2-torsion structure, and either j = 0 with
    Trivial structure or j = 1728 with C2 structure.

    Known to be incomplete: for j = 0 Trivial pairs the exact subset test
    additionally requires b'/b to be a cube in the base field (equivalently,
    the two Frobenius 3-cycles have the same orientation on mu_3-labeled
    roots); with a non-cube ratio the restrictions form the coset of shifts
    disjoint from the equivariant maps.  Kept as stated for comparison;
    consumers needing the truth use all_isos_are_restrictions.
    """
    s1 = two_torsion_module(curve1).structure
    s2 = two_torsion_module(curve2).structure
    if curve1.j_invariant() != curve2.j_invariant() or s1 != s2:
        return False
    if curve1.a.is_zero() and s1 == "Trivial":
        return True
    return curve1.b.is_zero() and s1 == "C2"


def weil_pairing_e2(curve, point1, point2):
    """The 2-torsion Weil pairing, valued in {1, -1} of the curve's field.

    Evaluated through f_T = x - x_T (divisor 2(T) - 2(O)) on auxiliary
    divisors: e_2(P, Q) = [f_P(Q+R)/f_P(R)] / [f_Q(P+S)/f_Q(S)].  If the curve
    has too few rational points to host valid auxiliaries, the computation
    moves to a quadratic extension; the value is reported in the original
    field either way.
    """
    base = curve.field
    if point1 is None or point2 is None:
        return base.one
    for pt in (point1, point2):
        assert curve.contains(pt) and pt[1].is_zero()
    value = _pairing_once(curve, point1, point2)
    while value is None:
        ext = curve.base_change(2)
        phi = embedding(curve.field, ext.field)
        point1 = (phi(point1[0]), phi(point1[1]))
        point2 = (phi(point2[0]), phi(point2[1]))
        curve = ext
        value = _pairing_once(curve, point1, point2)
    assert value == 1 or value == -1
    return base.one if value == 1 else -base.one


def _pairing_once(curve, P, Q):
    pts = curve.points()

    def straight(T, X):
        # value of x - x_T at X, None when X is the pole O
        return None if X is None else X[0] - T[0]

    first = None
    for R in pts:
        v1 = straight(P, add_points(curve, Q, R))
        v2 = straight(P, R)
        if v1 is None or v2 is None or v1.is_zero() or v2.is_zero():
            continue
        first = v1 / v2
        break
    if first is None:
        return None
    for S in pts:
        w1 = straight(Q, add_points(curve, P, S))
        w2 = straight(Q, S)
        if w1 is None or w2 is None or w1.is_zero() or w2.is_zero():
            continue
        return first * w2 / w1
    return None
