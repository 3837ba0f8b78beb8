"""Law checking for algebras and for families of sets over them.

A law is a named conjunction of equations in the operations wedge, vee and
(optionally) complement. Weak Boolean algebras promise none of them, which
is the point: each law is checked by evaluation and answered with a
tri-state verdict. Finite carriers are scanned exhaustively in declaration
order, so the first witness is stable; infinite carriers are probed on
every tuple of boundary elements first (the places laws break, like 1/2 in
the unit interval or the unit matrices) and then on seeded random samples,
with the count and seed recorded in the verdict.

Families of sets are checked the same way, and :func:`lift_check` runs both
levels side by side: a law holds for all sets over a family exactly when it
holds in every per-point algebra, and a per-point counterexample lifts to a
set-level one by placing the failing values at that point and O everywhere
else. The report records whether the two levels agreed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations, islice, product
from math import prod
from typing import Callable

from .algebra import AlgebraHandle, Element, check_wba_axioms
from .errors import PreconditionError
from .lattice import check_cha
from .reporting import LawReport, Verdict, Witness
from .sets import (
    AlgebraFamily,
    ModernSet,
    Point,
    complement as set_complement,
    embed_crisp,
    empty_set,
    full_set,
    intersection,
    modern_set,
    union,
    verify_crisp_restriction,
)

Equation = tuple[str, Callable]


@dataclass(frozen=True)
class Law:
    """Equations checked together under one name.

    ``equations`` entries are (label, fn) where fn(ops, *args) returns the
    two sides to compare; ``ops`` exposes wedge/vee/complement/zero/one.
    ``diagnostic`` marks laws reported for interest rather than as part of
    the standard battery.
    """

    name: str
    arity: int
    needs_complement: bool
    equations: tuple[Equation, ...]
    diagnostic: bool = False


LAWS: tuple[Law, ...] = (
    Law(
        "commutative-wedge", 2, False,
        (("x wedge y = y wedge x", lambda o, x, y: (o.wedge(x, y), o.wedge(y, x))),),
    ),
    Law(
        "commutative-vee", 2, False,
        (("x vee y = y vee x", lambda o, x, y: (o.vee(x, y), o.vee(y, x))),),
    ),
    Law(
        "associative-wedge", 3, False,
        ((
            "x wedge (y wedge z) = (x wedge y) wedge z",
            lambda o, x, y, z: (o.wedge(x, o.wedge(y, z)), o.wedge(o.wedge(x, y), z)),
        ),),
    ),
    Law(
        "associative-vee", 3, False,
        ((
            "x vee (y vee z) = (x vee y) vee z",
            lambda o, x, y, z: (o.vee(x, o.vee(y, z)), o.vee(o.vee(x, y), z)),
        ),),
    ),
    Law(
        "absorption", 2, False,
        (
            ("x wedge (x vee y) = x", lambda o, x, y: (o.wedge(x, o.vee(x, y)), x)),
            ("x vee (x wedge y) = x", lambda o, x, y: (o.vee(x, o.wedge(x, y)), x)),
        ),
    ),
    Law(
        "distributive", 3, False,
        (
            (
                "x vee (y wedge z) = (x vee y) wedge (x vee z)",
                lambda o, x, y, z: (
                    o.vee(x, o.wedge(y, z)),
                    o.wedge(o.vee(x, y), o.vee(x, z)),
                ),
            ),
            (
                "x wedge (y vee z) = (x wedge y) vee (x wedge z)",
                lambda o, x, y, z: (
                    o.wedge(x, o.vee(y, z)),
                    o.vee(o.wedge(x, y), o.wedge(x, z)),
                ),
            ),
        ),
    ),
    Law(
        "idempotent-wedge", 1, False,
        (("x wedge x = x", lambda o, x: (o.wedge(x, x), x)),),
    ),
    Law(
        "idempotent-vee", 1, False,
        (("x vee x = x", lambda o, x: (o.vee(x, x), x)),),
    ),
    Law(
        "excluded-middle", 1, True,
        (("x vee complement(x) = I", lambda o, x: (o.vee(x, o.complement(x)), o.one)),),
    ),
    Law(
        "non-contradiction", 1, True,
        (("x wedge complement(x) = O", lambda o, x: (o.wedge(x, o.complement(x)), o.zero)),),
    ),
    Law(
        "de-morgan", 2, True,
        (
            (
                "complement(x vee y) = complement(x) wedge complement(y)",
                lambda o, x, y: (
                    o.complement(o.vee(x, y)),
                    o.wedge(o.complement(x), o.complement(y)),
                ),
            ),
            (
                "complement(x wedge y) = complement(x) vee complement(y)",
                lambda o, x, y: (
                    o.complement(o.wedge(x, y)),
                    o.vee(o.complement(x), o.complement(y)),
                ),
            ),
        ),
        diagnostic=True,
    ),
)

LAW_NAMES: tuple[str, ...] = tuple(law.name for law in LAWS)
_BY_NAME = {law.name: law for law in LAWS}


def get_law(name: str) -> Law:
    try:
        return _BY_NAME[name]
    except KeyError:
        known = ", ".join(LAW_NAMES)
        raise ValueError(f"unknown law {name!r}; known laws: {known}") from None


def _resolve(law: "Law | str") -> Law:
    return get_law(law) if isinstance(law, str) else law


def _first_failure(ops, law: Law, args: tuple) -> Witness | None:
    for label, fn in law.equations:
        lhs, rhs = fn(ops, *args)
        if lhs != rhs:
            return Witness(inputs=args, lhs=lhs, rhs=rhs, note=label)
    return None


def _scan(ops, law: Law, tuples) -> Witness | None:
    for args in tuples:
        witness = _first_failure(ops, law, args)
        if witness is not None:
            return witness
    return None


def check_law(a: AlgebraHandle, law: "Law | str", samples: int = 1000, seed: int = 0) -> LawReport:
    """One law on one algebra.

    Finite carriers: exhaustive, declaration order. Infinite carriers: all
    tuples of boundary elements, then ``samples`` seeded random tuples.
    """
    law = _resolve(law)
    if law.needs_complement and a.complement is None:
        return LawReport(law.name, Verdict.not_applicable(
            f"algebra {a.name!r} declares no complement"
        ))

    if a.elements is not None:
        witness = _scan(a, law, product(a.elements, repeat=law.arity))
        if witness is None:
            return LawReport(law.name, Verdict.holds_exhaustive())
        return LawReport(law.name, Verdict.fails(witness))

    checked = 0
    for args in product(a.boundary, repeat=law.arity):
        checked += 1
        witness = _first_failure(a, law, args)
        if witness is not None:
            return LawReport(law.name, Verdict.fails(witness))
    if a.sample is not None:
        rng = random.Random(seed)
        for _ in range(samples):
            args = tuple(a.sample(rng) for _ in range(law.arity))
            checked += 1
            witness = _first_failure(a, law, args)
            if witness is not None:
                return LawReport(law.name, Verdict.fails(witness))
    return LawReport(law.name, Verdict.holds_sampled(samples=checked, seed=seed))


def check_all_laws(a: AlgebraHandle, samples: int = 1000, seed: int = 0) -> tuple[LawReport, ...]:
    """Every registered law, in registry order."""
    return tuple(check_law(a, law, samples=samples, seed=seed) for law in LAWS)


# ---------------------------------------------------------------------------
# Laws on families of sets


class _SetOps:
    """Adapter giving modern-set operations the algebra-ops attribute shape."""

    def __init__(self, family: AlgebraFamily):
        self.family = family
        self.wedge = intersection
        self.vee = union
        self.zero = empty_set(family)
        self.one = full_set(family)
        if all(family.algebra_at(x).complement is not None for x in family.universe.points):
            self.complement = set_complement
        else:
            self.complement = None


def _family_is_finite(family: AlgebraFamily) -> bool:
    return all(family.algebra_at(x).finite for x in family.universe.points)


def _set_count(family: AlgebraFamily) -> int:
    return prod(len(family.algebra_at(x).elements) for x in family.universe.points)


def _all_sets(family: AlgebraFamily):
    points = family.universe.points
    carriers = [family.algebra_at(x).elements for x in points]
    for combo in product(*carriers):
        yield ModernSet(family, dict(zip(points, combo)))


def _random_set(family: AlgebraFamily, rng: random.Random) -> ModernSet:
    values = {}
    for x in family.universe.points:
        alg = family.algebra_at(x)
        if alg.elements is not None:
            values[x] = alg.elements[rng.randrange(len(alg.elements))]
        elif alg.sample is not None:
            values[x] = alg.sample(rng)
        else:
            raise PreconditionError(f"algebra {alg.name!r} cannot be sampled")
    return ModernSet(family, values)


def _spike_sets(family: AlgebraFamily) -> list[ModernSet]:
    """Empty, full, and every one-point spike over carrier/boundary values.

    A spike holds one interesting value at one point and O elsewhere; these
    are exactly the sets that lift per-point counterexamples, so forcing
    them into every sampled family check makes pointwise failures at
    boundary values impossible to miss.
    """
    pool = [empty_set(family), full_set(family)]
    seen = set(pool)
    for x in family.universe.points:
        alg = family.algebra_at(x)
        values = alg.elements if alg.elements is not None else alg.boundary
        for v in values:
            spike = lift_point_value(family, x, v)
            if spike not in seen:
                seen.add(spike)
                pool.append(spike)
    return pool


def _forced_tuples(family: AlgebraFamily, arity: int, per_point_cap: int = 1000):
    """Deterministic tuples every sampled family check must try.

    All empty/full combinations, then for each point all tuples of spikes
    at that same point (capped per point). Same-point spike tuples are the
    lifted images of per-point counterexample tuples, so a law failing at
    a boundary value of any single point cannot slip past this stage.
    """
    bounds = (empty_set(family), full_set(family))
    yield from product(bounds, repeat=arity)
    for x in family.universe.points:
        alg = family.algebra_at(x)
        values = alg.elements if alg.elements is not None else alg.boundary
        spikes = [lift_point_value(family, x, v) for v in values]
        yield from islice(product(spikes, repeat=arity), per_point_cap)


def lift_point_value(family: AlgebraFamily, point: Point, value: Element) -> ModernSet:
    """The set holding ``value`` at ``point`` and O at every other point."""
    membership = {x: family.algebra_at(x).zero for x in family.universe.points}
    membership[point] = value
    return modern_set(family, membership)


def lift_point_witness(family: AlgebraFamily, point: Point, witness: Witness) -> tuple[ModernSet, ...]:
    """Lift a per-point counterexample to sets: spike each input at the point."""
    return tuple(lift_point_value(family, point, v) for v in witness.inputs)


def check_family_law(
    family: AlgebraFamily,
    law: "Law | str",
    samples: int = 200,
    seed: int = 0,
    max_exhaustive: int = 50_000,
    forced_cap: int = 20_000,
) -> LawReport:
    """One law over all modern sets of a family.

    Exhaustive when every carrier is finite and the tuple count stays
    within ``max_exhaustive``; otherwise forced spike tuples (capped at
    ``forced_cap``) followed by seeded random sets.
    """
    law = _resolve(law)
    ops = _SetOps(family)
    if law.needs_complement and ops.complement is None:
        missing = next(
            x
            for x in family.universe.points
            if family.algebra_at(x).complement is None
        )
        return LawReport(law.name, Verdict.not_applicable(
            f"algebra at point {missing!r} declares no complement"
        ))

    if _family_is_finite(family) and _set_count(family) ** law.arity <= max_exhaustive:
        witness = _scan(ops, law, product(_all_sets(family), repeat=law.arity))
        if witness is None:
            return LawReport(law.name, Verdict.holds_exhaustive())
        return LawReport(law.name, Verdict.fails(witness))

    checked = 0
    for args in islice(_forced_tuples(family, law.arity), forced_cap):
        checked += 1
        witness = _first_failure(ops, law, args)
        if witness is not None:
            return LawReport(law.name, Verdict.fails(witness))
    rng = random.Random(seed)
    for _ in range(samples):
        args = tuple(_random_set(family, rng) for _ in range(law.arity))
        checked += 1
        witness = _first_failure(ops, law, args)
        if witness is not None:
            return LawReport(law.name, Verdict.fails(witness))
    return LawReport(law.name, Verdict.holds_sampled(samples=checked, seed=seed))


@dataclass(frozen=True)
class LiftReport:
    """Side-by-side verdicts: the family of sets vs each per-point algebra.

    ``consistent`` records the biconditional: the set-level law holds
    exactly when every per-point law holds (compared only when both levels
    were applicable).
    """

    law: str
    family_verdict: Verdict
    per_point: dict[Point, Verdict]
    consistent: bool

    def describe(self) -> str:
        lines = [f"law {self.law}:"]
        lines.append(f"  family of sets: {self.family_verdict.describe()}")
        for point, verdict in self.per_point.items():
            lines.append(f"  at point {point!r}: {verdict.describe()}")
        lines.append(f"  levels agree: {'yes' if self.consistent else 'NO'}")
        return "\n".join(lines)


def lift_check(
    family: AlgebraFamily,
    law: "Law | str",
    samples: int = 200,
    seed: int = 0,
) -> LiftReport:
    """Check a law pointwise and on the family of sets, and compare.

    Sampled verdicts at the two levels can disagree by chance alone, so
    before declaring an inconsistency the counterexample is transported
    across levels: a per-point witness is spiked into sets and re-checked
    on the family, and a family witness is restricted to each point. Only
    a disagreement that survives both transports is reported.
    """
    law = _resolve(law)
    per_point = {
        x: check_law(family.algebra_at(x), law, samples=samples, seed=seed).verdict
        for x in family.universe.points
    }
    family_verdict = check_family_law(family, law, samples=samples, seed=seed).verdict
    if family_verdict.applicable:
        failing_points = [x for x, v in per_point.items() if v.failed]
        if family_verdict.holds and failing_points:
            ops = _SetOps(family)
            for x in failing_points:
                lifted = lift_point_witness(family, x, per_point[x].witness)
                witness = _first_failure(ops, law, lifted)
                if witness is not None:
                    family_verdict = Verdict.fails(witness)
                    break
        elif family_verdict.failed and not failing_points:
            for x in family.universe.points:
                alg = family.algebra_at(x)
                args = tuple(s.value_at(x) for s in family_verdict.witness.inputs)
                witness = _first_failure(alg, law, args)
                if witness is not None:
                    per_point[x] = Verdict.fails(witness)
                    break

    if not family_verdict.applicable:
        consistent = True
    else:
        all_points_hold = all(v.holds for v in per_point.values())
        consistent = family_verdict.holds == all_points_hold
    return LiftReport(
        law=law.name,
        family_verdict=family_verdict,
        per_point=per_point,
        consistent=consistent,
    )


# ---------------------------------------------------------------------------
# Generalized-fuzzy ring of sets


@dataclass(frozen=True)
class GfRingReport:
    """Four conditions for the sets over a family to form a ring of sets.

    ``cross_validated`` is a direct set-level frame-law check run when the
    family is small enough; ``routes_agree`` compares it with the per-point
    route and is None when the direct route was skipped.
    """

    cha_per_point: dict[Point, Verdict]
    powerset_embeds: Verdict
    crisp_ops_coincide: Verdict
    bounds_absorb: Verdict
    cross_validated: Verdict
    routes_agree: bool | None
    passed: bool

    def describe(self) -> str:
        lines = ["generalized-fuzzy ring conditions:"]
        worst = "holds" if all(v.holds for v in self.cha_per_point.values()) else "fails"
        lines.append(f"  1. complete Heyting at every point: {worst}")
        for point, verdict in self.cha_per_point.items():
            lines.append(f"       {point!r}: {verdict.describe()}")
        lines.append(f"  2. powerset embeds: {self.powerset_embeds.describe()}")
        lines.append(f"  3. crisp operations coincide: {self.crisp_ops_coincide.describe()}")
        lines.append(f"  4. bounds absorb: {self.bounds_absorb.describe()}")
        lines.append(f"  direct frame-law route: {self.cross_validated.describe()}")
        if self.routes_agree is not None:
            lines.append(f"  routes agree: {'yes' if self.routes_agree else 'NO'}")
        lines.append(f"  overall: {'passed' if self.passed else 'failed'}")
        return "\n".join(lines)


def check_gf_ring_conditions(
    family: AlgebraFamily,
    samples: int = 100,
    seed: int = 0,
    universe_size_cap: int = 4,
) -> GfRingReport:
    """Check the four ring-of-sets conditions for a family.

    Every point must be lattice-backed or the rational unit interval;
    anything else (matrix algebras in particular) has no candidate order,
    so the check refuses with PreconditionError rather than guessing.
    """
    points = family.universe.points
    if len(points) > universe_size_cap:
        raise PreconditionError(
            f"|X| = {len(points)} exceeds the cap {universe_size_cap}"
        )
    cha_per_point: dict[Point, Verdict] = {}
    for x in points:
        alg = family.algebra_at(x)
        if alg.lattice is not None:
            cha_per_point[x] = check_cha(alg.lattice)
        elif alg.structure == "fuzzy-unit":
            cha_per_point[x] = Verdict.holds_exhaustive(
                details=(("structure", "total order on the rational unit interval"),)
            )
        else:
            raise PreconditionError(
                f"algebra {alg.name!r} at point {x!r} is not lattice-backed; "
                f"the ring-of-sets conditions need a per-point order"
            )

    n = len(points)
    embeddings = []
    for mask in range(1 << n):
        embeddings.append(
            embed_crisp(family, [points[i] for i in range(n) if mask & (1 << i)])
        )
    powerset_embeds = Verdict.holds_exhaustive(details=(("subsets", 1 << n),))
    seen: dict[ModernSet, int] = {}
    for mask, embedded in enumerate(embeddings):
        if embedded in seen:
            powerset_embeds = Verdict.fails(Witness(
                inputs=(seen[embedded], mask),
                lhs="equal embeddings",
                rhs="distinct embeddings",
                note="two different subsets embed to the same set",
            ))
            break
        seen[embedded] = mask

    crisp_ops_coincide = verify_crisp_restriction(family, universe_size_cap).verdict

    bounds_absorb = _check_bounds_absorb(family, samples=samples, seed=seed)

    small = len(points) <= 2 and _family_is_finite(family) and all(
        len(family.algebra_at(x).elements) <= 4 for x in points
    )
    if small:
        cross_validated = _direct_frame_law(family)
        per_point_predicts = all(v.holds for v in cha_per_point.values())
        routes_agree = cross_validated.holds == per_point_predicts
    else:
        cross_validated = Verdict.not_applicable(
            "direct route runs only for families with at most 2 points and carriers of at most 4 elements"
        )
        routes_agree = None

    passed = (
        all(v.holds for v in cha_per_point.values())
        and powerset_embeds.holds
        and crisp_ops_coincide.holds
        and bounds_absorb.holds
        and routes_agree is not False
    )
    return GfRingReport(
        cha_per_point=cha_per_point,
        powerset_embeds=powerset_embeds,
        crisp_ops_coincide=crisp_ops_coincide,
        bounds_absorb=bounds_absorb,
        cross_validated=cross_validated,
        routes_agree=routes_agree,
        passed=passed,
    )


def _check_bounds_absorb(family: AlgebraFamily, samples: int, seed: int) -> Verdict:
    """A vee full = full and A wedge empty = empty, for many A."""
    empty = empty_set(family)
    full = full_set(family)

    def violation(a: ModernSet) -> Witness | None:
        if union(a, full) != full:
            return Witness(inputs=(a,), lhs=union(a, full), rhs=full, note="A vee X = X")
        if intersection(a, empty) != empty:
            return Witness(
                inputs=(a,), lhs=intersection(a, empty), rhs=empty, note="A wedge empty = empty"
            )
        return None

    if _family_is_finite(family) and _set_count(family) <= 4096:
        for a in _all_sets(family):
            w = violation(a)
            if w is not None:
                return Verdict.fails(w)
        return Verdict.holds_exhaustive()

    checked = 0
    for a in _spike_sets(family):
        checked += 1
        w = violation(a)
        if w is not None:
            return Verdict.fails(w)
    rng = random.Random(seed)
    for _ in range(samples):
        checked += 1
        w = violation(_random_set(family, rng))
        if w is not None:
            return Verdict.fails(w)
    return Verdict.holds_sampled(samples=checked, seed=seed)


def _direct_frame_law(family: AlgebraFamily, family_size_cap: int = 3) -> Verdict:
    """Frame law stated on sets: (vee of A_i) wedge B = vee of (A_i wedge B)."""
    sets_list = list(_all_sets(family))
    empty = empty_set(family)
    for size in range(family_size_cap + 1):
        for collection in combinations(sets_list, size):
            joined = reduce(union, collection, empty)
            for b in sets_list:
                lhs = intersection(joined, b)
                rhs = reduce(union, (intersection(a, b) for a in collection), empty)
                if lhs != rhs:
                    return Verdict.fails(Witness(
                        inputs=(tuple(collection), b),
                        lhs=lhs,
                        rhs=rhs,
                        note="(vee of collection) wedge B = vee of pairwise wedges",
                    ))
    return Verdict.holds_exhaustive()


# ---------------------------------------------------------------------------
# Family classification


LEVELS: tuple[str, ...] = (
    "modern",
    "L-fuzzy",
    "generalized-fuzzy",
    "fuzzy-like",
    "classical",
)


@dataclass(frozen=True)
class FamilyClassification:
    """Most specific level of the hierarchy that fits every point."""

    level: str
    per_point: dict[Point, str] = field(compare=False)

    @property
    def rank(self) -> int:
        return LEVELS.index(self.level)

    def describe(self) -> str:
        lines = [f"classification: {self.level}"]
        for point, evidence in self.per_point.items():
            lines.append(f"  {point!r}: {evidence}")
        return "\n".join(lines)


def _is_classical_point(alg: AlgebraHandle) -> bool:
    """Two-element carrier {O, I}, Boolean tables, complement swapping them.

    Decided by evaluation, not by the structure tag, so a two-element chain
    counts as classical.
    """
    if alg.elements is None or len(alg.elements) != 2:
        return False
    if set(alg.elements) != {alg.zero, alg.one}:
        return False
    if not check_wba_axioms(alg).passed:
        return False
    if alg.complement is None:
        return False
    return (
        alg.complement(alg.zero) == alg.one and alg.complement(alg.one) == alg.zero
    )


def _point_profile(alg: AlgebraHandle) -> tuple[bool, bool, bool, str]:
    """(classical, fuzzy_unit, lattice_backed_cha_or_not, evidence)."""
    if _is_classical_point(alg):
        return True, False, True, "two-element Boolean algebra"
    if alg.structure == "fuzzy-unit":
        return False, True, True, "rational unit interval with min/max and 1 - x"
    if alg.lattice is not None:
        cha = check_cha(alg.lattice)
        if cha.holds:
            return False, False, True, f"lattice {alg.lattice.name!r} (complete Heyting)"
        return False, False, False, f"lattice {alg.lattice.name!r} (not complete Heyting)"
    return False, False, False, f"algebra {alg.name!r} (no backing order)"


def classify_family(family: AlgebraFamily) -> FamilyClassification:
    """Most specific fit: classical, fuzzy-like, generalized-fuzzy, L-fuzzy, modern.

    classical needs every point classical; fuzzy-like needs every point to
    be the rational unit interval; generalized-fuzzy needs an order-backed
    complete Heyting algebra at every point (classical and fuzzy points
    qualify); L-fuzzy needs order backing but not the frame law; anything
    else is plain modern.
    """
    per_point: dict[Point, str] = {}
    all_classical = True
    all_fuzzy = True
    all_lattice_backed = True
    all_cha = True
    for x in family.universe.points:
        alg = family.algebra_at(x)
        classical, fuzzy_unit, cha, evidence = _point_profile(alg)
        per_point[x] = evidence
        lattice_backed = classical or fuzzy_unit or alg.lattice is not None
        all_classical &= classical
        all_fuzzy &= fuzzy_unit
        all_lattice_backed &= lattice_backed
        all_cha &= lattice_backed and cha
    if all_classical:
        level = "classical"
    elif all_fuzzy:
        level = "fuzzy-like"
    elif all_cha:
        level = "generalized-fuzzy"
    elif all_lattice_backed:
        level = "L-fuzzy"
    else:
        level = "modern"
    return FamilyClassification(level=level, per_point=per_point)
