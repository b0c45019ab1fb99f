"""Trace classification: which complementary traces occur for genus-2 covers.

Three layers:

* admissible_traces: pure arithmetic (Waterhouse) — which integers in the
  Hasse window occur as traces of elliptic curves over F_q at all;
* lambda_formula: the closed-form candidate set for a fixed base curve,
  driven entirely by its 2-torsion structure, with exception flags on the two
  rigid (j, structure) combinations where candidates may fail;
* lambda_exact: ground truth by enumeration — a trace survives iff some curve
  of that trace passes the Kani gluing test against the base curve.

A sorted LambdaSet ties results to the base curve and validates the standing
invariants (admissibility, parity with the base trace, negation symmetry) on
construction, so a violation anywhere surfaces immediately.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .ffield import field_of_order
from .ecurve import FieldTooLarge, curve_inventory
from .galois2 import kani_admissible

LAMBDA_MODES = ("formula", "kani", "oracle")


class OutOfHasseWindow(ValueError):
    """|a| exceeds 2*sqrt(q)."""


class NotAdmissible(ValueError):
    """No elliptic curve over F_q has this trace."""


class DegreeNotCoprime(ValueError):
    """Cover degree divisible by the characteristic is out of scope."""


def _prime_power(q):
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"{q!r} is not a prime power")
    for p in range(2, q + 1):
        if p * p > q:
            return q, 1
        if q % p:
            continue
        n, m = q, 0
        while n % p == 0:
            n //= p
            m += 1
        if n != 1:
            raise ValueError(f"{q} is not a prime power")
        return p, m
    raise AssertionError


def hasse_window(q):
    """Inclusive trace bounds (-floor(2*sqrt(q)), +floor(2*sqrt(q)))."""
    w = math.isqrt(4 * q)
    return (-w, w)


class AdmissibleSet:
    """All realizable elliptic-curve traces over F_q, sorted ascending."""

    __slots__ = ("q", "traces")

    def __init__(self, q, traces):
        self.q = q
        self.traces = tuple(sorted(traces))
        assert all(-t in traces for t in traces)

    def __contains__(self, a):
        return a in self.traces

    def __iter__(self):
        return iter(self.traces)

    def __repr__(self):
        return f"AdmissibleSet(q={self.q}, {list(self.traces)})"


@lru_cache(maxsize=None)
def admissible_traces(q):
    """Waterhouse classification of realizable traces over F_q = F_{p^m}.

    An integer N in the Hasse window is admissible iff one of:
    * gcd(N, p) = 1;
    * m odd and (N = 0, or p = 2 and N^2 = 2q, or p = 3 and N^2 = 3q);
    * m even and (N^2 = 4q, or N^2 = q with p != 1 mod 3,
      or N = 0 with p != 1 mod 4).

    Pure arithmetic over any odd q, including characteristic 3 where curve
    construction elsewhere is refused.
    """
    p, m = _prime_power(q)
    lo, hi = hasse_window(q)
    found = []
    for n in range(lo, hi + 1):
        if n % p != 0:
            found.append(n)
        elif m % 2 == 1:
            if n == 0 or (p == 2 and n * n == 2 * q) or (p == 3 and n * n == 3 * q):
                found.append(n)
        else:
            if (
                n * n == 4 * q
                or (n * n == q and p % 3 != 1)
                or (n == 0 and p % 4 != 1)
            ):
                found.append(n)
    return AdmissibleSet(q, found)


def weil_poly(q, a):
    """Coefficients (q, -a, 1) of the normalized L-factor qT^2 - aT + 1."""
    if a * a > 4 * q:
        raise OutOfHasseWindow(f"trace {a} outside the Hasse window for q={q}")
    return (q, -a, 1)


class LambdaSet:
    """Sorted complementary-trace set for one base curve and cover degree."""

    __slots__ = ("curve", "d", "traces", "mode")

    def __init__(self, curve, d, traces, mode):
        assert mode in LAMBDA_MODES
        self.curve = curve
        self.d = d
        self.traces = tuple(sorted(set(traces)))
        self.mode = mode
        q = curve.field.order
        admissible = admissible_traces(q)
        base_parity = curve.trace() % 2
        for a in self.traces:
            assert a in admissible, f"inadmissible trace {a}"
            assert a % 2 == base_parity, f"parity violation at {a}"
            assert -a in self.traces, f"negation symmetry violation at {a}"

    def polynomials(self):
        q = self.curve.field.order
        return [weil_poly(q, a) for a in self.traces]

    def __eq__(self, other):
        return (
            isinstance(other, LambdaSet)
            and self.curve == other.curve
            and self.d == other.d
            and self.traces == other.traces
        )

    def __repr__(self):
        return (
            f"LambdaSet(d={self.d}, mode={self.mode}, traces={list(self.traces)})"
        )


@lru_cache(maxsize=None)
def _classes_by_trace(field):
    by_trace = {}
    for curve in curve_inventory(field):
        by_trace.setdefault(curve.trace(), []).append(curve)
    return by_trace


def lambda_formula(curve):
    """Closed-form candidate traces plus the subset needing exact resolution.

    Candidates by 2-torsion structure of the base curve:
    * Trivial: every odd admissible trace;
    * C2: every even admissible trace, except +-2*sqrt(q) over square q
      (those isogeny classes are entirely Full);
    * Full: every admissible trace congruent to the base trace mod 4.

    Every candidate is flagged for exact resolution when the base curve sits
    in a rigid combination: j = 0 with Trivial structure, or j = 1728 with C2
    (geometric isomorphisms can then absorb all module isomorphisms, killing
    otherwise-valid candidates; which ones die depends on the curve).
    """
    q = curve.field.order
    structure = curve.two_torsion_structure()
    admissible = admissible_traces(q).traces
    if structure == "Trivial":
        candidates = [a for a in admissible if a % 2 == 1]
        flagged = frozenset(candidates) if curve.a.is_zero() else frozenset()
    elif structure == "C2":
        root = math.isqrt(q)
        square = root * root == q
        candidates = [
            a for a in admissible if a % 2 == 0 and not (square and abs(a) == 2 * root)
        ]
        flagged = frozenset(candidates) if curve.b.is_zero() else frozenset()
    else:
        base = curve.trace() % 4
        candidates = [a for a in admissible if a % 4 == base]
        flagged = frozenset()
    return LambdaSet(curve, 2, candidates, "formula"), flagged


def _has_kani_partner(curve, a):
    partners = _classes_by_trace(curve.field).get(a, ())
    return any(kani_admissible(curve, other) for other in partners)


def lambda_formula_resolved(curve):
    """lambda_formula with every flagged candidate settled by the Kani test."""
    candidates, flagged = lambda_formula(curve)
    if not flagged:
        return candidates
    kept = [
        a
        for a in candidates.traces
        if a not in flagged or _has_kani_partner(curve, a)
    ]
    return LambdaSet(curve, 2, kept, "formula")


def lambda_exact(curve):
    """Ground-truth trace set: enumerate all classes and apply the Kani test."""
    q = curve.field.order
    traces = [
        a for a in admissible_traces(q).traces if _has_kani_partner(curve, a)
    ]
    return LambdaSet(curve, 2, traces, "kani")


def lambda_set(curve, d):
    """Complementary traces of genus-2 degree-d covers: Kani for d = 2, and
    provably empty for d > 2 (no higher-degree abelian cover of an elliptic
    curve has genus 2 when gcd(d, q) = 1)."""
    if d < 2:
        raise ValueError("cover degree must be at least 2")
    if d % curve.field.p == 0:
        raise DegreeNotCoprime(f"degree {d} shares a factor with q={curve.field.order}")
    if d == 2:
        return lambda_exact(curve)
    return LambdaSet(curve, d, [], "kani")


def two_torsion_profile_by_trace(q, a):
    """Structures present in the trace-a isogeny class, by the closed form.

    Odd trace: Trivial only.  Even: the class is all-Full at the supersingular
    extremes a = +-2*sqrt(q); otherwise C2 alone when the point count is 2 mod
    4, and both Full and C2 when it is 0 mod 4.
    """
    if a not in admissible_traces(q):
        raise NotAdmissible(f"trace {a} is not admissible for q={q}")
    if a % 2 == 1:
        return frozenset({"Trivial"})
    root = math.isqrt(q)
    if root * root == q and abs(a) == 2 * root:
        return frozenset({"Full"})
    if (q + 1 - a) % 4 == 2:
        return frozenset({"C2"})
    return frozenset({"Full", "C2"})


def isogeny_class_two_torsion_profile(q, a):
    """Structures actually realized among inventory classes of trace a."""
    if a not in admissible_traces(q):
        raise NotAdmissible(f"trace {a} is not admissible for q={q}")
    field = field_of_order(q)
    found = {
        curve.two_torsion_structure()
        for curve in _classes_by_trace(field).get(a, ())
    }
    assert found, f"admissible trace {a} has no curve over F_{q}"
    return frozenset(found)


class RamificationSolution:
    """Non-negative integer solutions of one ramification-count equation."""

    __slots__ = ("case", "coefficients", "target", "solutions")

    def __init__(self, case, coefficients, target):
        self.case = case
        self.coefficients = coefficients
        self.target = target
        self.solutions = frozenset(diophantine_triples(coefficients, target))

    def __repr__(self):
        c1, c2, c3 = self.coefficients
        return (
            f"RamificationSolution({self.case}: {c1}m1+{c2}m2+{c3}m3"
            f"={self.target}, {sorted(self.solutions)})"
        )


def diophantine_triples(coefficients, target):
    """All non-negative (m1, m2, m3) with c1*m1 + c2*m2 + c3*m3 = target."""
    c1, c2, c3 = coefficients
    out = []
    for m1 in range(target // c1 + 1):
        for m2 in range((target - c1 * m1) // c2 + 1):
            rest = target - c1 * m1 - c2 * m2
            if rest % c3 == 0:
                out.append((m1, m2, rest // c3))
    return out

# branch-type count equations behind the d > 2 emptiness argument: covers of
# degree 6 and 8 would need ramification multiplicities solving these, and
# every solution is then excluded by the group structure of the cover
_RAMIFICATION_CASES = {
    "degree6": ((5, 4, 3), 14),
    "degree8": ((7, 6, 4), 18),
}


def ramification_solutions(case):
    if case not in _RAMIFICATION_CASES:
        raise ValueError(f"unknown case {case!r}; pick from {sorted(_RAMIFICATION_CASES)}")
    coefficients, target = _RAMIFICATION_CASES[case]
    return RamificationSolution(case, coefficients, target)
