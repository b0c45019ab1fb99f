import math
import random

import pytest

from lambda2.ecurve import (
    FieldTooLarge,
    PointNotOnCurve,
    BadCharacteristic,
    EllipticCurve,
    SingularCurve,
    add_points,
    curve_inventory,
    enumerate_curves,
    make_curve,
    negate_point,
    scalar_mul,
)
from lambda2.ffield import embedding, make_field

F5 = make_field(5)
F7 = make_field(7)
F13 = make_field(13)
F25 = make_field(5, 2)

# (a, b) -> (j, trace, supersingular, aut) over F_5, all independently recounted
GOLDEN_F5 = {
    (0, 1): (0, 0, True, 2),
    (0, 2): (0, 0, True, 2),
    (1, 0): (3, 2, False, 4),
    (1, 1): (2, -3, False, 2),
    (1, 2): (1, 2, False, 2),
    (2, 0): (3, 4, False, 4),
    (2, 1): (4, -1, False, 2),
    (3, 0): (3, -4, False, 4),
    (3, 2): (4, 1, False, 2),
    (4, 0): (3, -2, False, 4),
    (4, 1): (1, -2, False, 2),
    (4, 2): (2, 3, False, 2),
}


def test_constructor_validation():
    with pytest.raises(SingularCurve):
        make_curve(F5, 0, 0)
    with pytest.raises(SingularCurve):
        make_curve(F5, 2, 2)  # 4*8 + 27*4 = 140 = 0 mod 5
    with pytest.raises(BadCharacteristic):
        make_curve(make_field(3), 1, 1)


def test_singular_locus_is_exact():
    # 4a^3 + 27b^2 = 0 over F_5 at exactly five pairs
    singular = [
        (a, b)
        for a in range(5)
        for b in range(5)
        if (4 * a**3 + 27 * b**2) % 5 == 0
    ]
    assert len(singular) == 5
    for a, b in singular:
        with pytest.raises(SingularCurve):
            make_curve(F5, a, b)


def test_golden_invariants_over_f5():
    for (a, b), (j, trace, ss, aut) in GOLDEN_F5.items():
        E = make_curve(F5, a, b)
        assert E.j_invariant() == F5.element(j), (a, b)
        assert E.trace() == trace, (a, b)
        assert E.is_supersingular() is ss, (a, b)
        assert E.automorphism_count() == aut, (a, b)


def test_trace_satisfies_hasse_bound():
    for field in (F5, F7, F13, F25):
        bound = math.isqrt(4 * field.order)
        for E in curve_inventory(field):
            assert abs(E.trace()) <= bound


def test_point_count_matches_affine_enumeration():
    for E in curve_inventory(F7):
        assert E.point_count() == len(E.points())
        for x, y in E.affine_points():
            assert E.contains((x, y))


def test_point_count_recursion_matches_direct_extension_count():
    for E in curve_inventory(F5):
        assert E.point_count(2) == E.base_change(2).point_count()
    E = make_curve(F7, 1, 3)
    assert E.point_count(2) == E.base_change(2).point_count()
    assert E.point_count(3) == E.base_change(3).point_count()


def test_trace_over_frozen_supersingular_case():
    # trace 0 over F_5 forces trace -10 over F_25
    E = make_curve(F5, 0, 1)
    assert E.trace_over(2) == -10
    assert E.base_change(2).trace() == -10


def test_quadratic_twist_negates_trace():
    E = make_curve(F5, 1, 1)
    Et = E.quadratic_twist()
    assert (Et.a, Et.b) == (F5.element(4), F5.element(3))
    assert Et.trace() == -E.trace() == 3
    for field in (F7, F25):
        for E in curve_inventory(field):
            assert E.quadratic_twist().trace() == -E.trace()


def test_twist_preserves_j_and_is_nontrivial_generically():
    for E in curve_inventory(F13):
        Et = E.quadratic_twist()
        assert Et.j_invariant() == E.j_invariant()
        if E.trace() != 0:
            assert not E.is_isomorphic(Et)


def test_automorphism_count_matches_orbit_stabilizer():
    for field in (F5, F7, F13, F25):
        n = field.order - 1
        for E in curve_inventory(field):
            stab = sum(
                1
                for u in field.nonzero_elements()
                if u**4 * E.a == E.a and u**6 * E.b == E.b
            )
            assert E.automorphism_count() == stab
            assert stab * len(E.isomorphism_orbit()) == n


def test_inventory_class_counts():
    # 2q - 4 + gcd(4, q-1) + gcd(6, q-1) classes for q = 5 mod 12 etc.
    expected = {5: 12, 7: 18, 11: 22, 13: 32, 25: 56, 49: 104}
    for q, count in expected.items():
        if q == 25:
            field = make_field(5, 2)
        elif q == 49:
            field = make_field(7, 2)
        else:
            field = make_field(q)
        inv = curve_inventory(field)
        assert len(inv) == count
        formula = 2 * q - 4 + math.gcd(4, q - 1) + math.gcd(6, q - 1)
        assert count == formula


def test_inventory_mass_formula():
    # orbit sizes partition the nonsingular (a, b) plane: sum 1/|Aut| = q
    for field in (F5, F7, F13, F25):
        total = sum(1 for _ in enumerate_curves(field))
        orbit_sum = 0
        mass = 0.0
        for E in curve_inventory(field):
            orbit_sum += len(E.isomorphism_orbit())
            mass += 1.0 / E.automorphism_count()
        assert orbit_sum == total
        assert abs(mass - field.order) < 1e-9


def test_inventory_reps_are_lex_minimal_and_sorted():
    inv = curve_inventory(F5)
    assert [
        (E.a.index, E.b.index) for E in inv
    ] == sorted((E.a.index, E.b.index) for E in inv)
    assert set(GOLDEN_F5) == {(E.a.index, E.b.index) for E in inv}
    for E in inv:
        rep = E.class_representative()
        assert (rep.a, rep.b) == (E.a, E.b)


def test_every_j_value_is_realized():
    for field in (F5, F7):
        js = {E.j_invariant().index for E in curve_inventory(field)}
        assert js == set(range(field.order))


def test_enumeration_cap():
    with pytest.raises(FieldTooLarge):
        list(enumerate_curves(make_field(353)))


def test_group_law_axioms():
    E = make_curve(F7, 1, 3)
    pts = E.points()
    rng = random.Random(11)
    for _ in range(60):
        P, Q, R = (rng.choice(pts) for _ in range(3))
        assert add_points(E, P, Q) == add_points(E, Q, P)
        assert add_points(E, add_points(E, P, Q), R) == add_points(
            E, P, add_points(E, Q, R)
        )
    for P in pts:
        assert add_points(E, P, negate_point(P)) is None
        assert add_points(E, P, None) == P
        assert E.contains(add_points(E, P, P))


def test_scalar_mul_annihilates_at_group_order():
    for E in curve_inventory(F5):
        n = E.point_count()
        for P in E.points():
            assert scalar_mul(E, n, P) is None


def test_group_structure_frozen_cases():
    # full rational 2-torsion, 4 points: the Klein group
    assert make_curve(F5, 1, 0).group_structure() == (2, 2)
    # 9 points with n1 required to divide q - 1 = 4: cyclic
    assert make_curve(F5, 1, 1).group_structure() == (1, 9)
    for E in curve_inventory(F7):
        n1, n2 = E.group_structure()
        assert n1 * n2 == E.point_count()
        assert n2 % n1 == 0
        assert (F7.order - 1) % n1 == 0


def test_base_change_embeds_rational_points():
    E = make_curve(F5, 1, 1)
    E2 = E.base_change(2)
    phi = embedding(F5, F25)
    for pt in E.affine_points():
        assert E2.contains((phi(pt[0]), phi(pt[1])))


GOLDEN_STRUCTURE_F5 = {
    (0, 1): "C2",
    (0, 2): "C2",
    (1, 0): "Full",
    (1, 1): "Trivial",
    (1, 2): "C2",
    (2, 0): "C2",
    (2, 1): "Trivial",
    (3, 0): "C2",
    (3, 2): "Trivial",
    (4, 0): "Full",
    (4, 1): "C2",
    (4, 2): "Trivial",
}


def test_two_torsion_structure_golden():
    for (a, b), want in GOLDEN_STRUCTURE_F5.items():
        assert make_curve(F5, a, b).two_torsion_structure() == want, (a, b)


def test_two_torsion_structure_parity_and_twist_invariance():
    # odd trace exactly characterizes the Trivial structure
    for field in (F5, F7, F13, F25):
        for E in curve_inventory(field):
            structure = E.two_torsion_structure()
            assert (E.trace() % 2 == 1) == (structure == "Trivial")
            n = E.point_count()
            if structure == "Full":
                assert n % 4 == 0
            if n % 4 == 2:
                assert structure == "C2"
            assert E.quadratic_twist().two_torsion_structure() == structure


def test_add_points_rejects_off_curve_input():
    E = make_curve(F5, 1, 1)
    with pytest.raises(PointNotOnCurve):
        add_points(E, (F5.element(1), F5.element(1)), None)


def test_two_torsion_point_sum():
    # the three order-2 points of y^2 = x^3 + x sum pairwise to each other
    E = make_curve(F5, 1, 0)
    z = F5.zero
    assert add_points(E, (F5.element(2), z), (F5.element(3), z)) == (z, z)
    assert add_points(E, (z, z), (z, z)) is None
