"""Sets whose membership values live in per-point weak Boolean algebras.

A universe is a finite tuple of points. An algebra family assigns one
algebra to each point; a modern set over the family maps each point to an
element of that point's carrier. Union applies each point's vee, with the
left set supplying the left operand (the operations need not commute, so
the order is part of the definition); intersection applies wedge the same
way; complement applies the per-point complement where declared.

The crisp sets are those taking only the values O and I. Embedding a plain
subset that way and checking every pairwise operation against frozenset
arithmetic, then the triple laws against the resulting tables, verifies
that the crisp fragment recovers ordinary set algebra exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Any, Hashable, Iterable, Mapping

from .algebra import AlgebraHandle, Element
from .errors import (
    DomainError,
    IncompatibleFamilyError,
    PreconditionError,
    StructuralError,
    UnsupportedOperationError,
)
from .reporting import LawReport, Verdict, Witness, render_element

Point = Hashable


@dataclass(frozen=True)
class Universe:
    """Finite, ordered collection of distinct points."""

    points: tuple[Point, ...]

    def __post_init__(self):
        if not self.points:
            raise StructuralError("a universe needs at least one point")
        if len(set(self.points)) != len(self.points):
            raise StructuralError("universe points must be distinct")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, point):
        return point in self.points


class AlgebraFamily:
    """One algebra per point. Instances compare by identity.

    Two sets may be combined only when their families are compatible:
    the same family object, or families over equal universes assigning
    the identical algebra object at every point.
    """

    def __init__(
        self,
        universe: Universe,
        assignment: Mapping[Point, AlgebraHandle],
        name: str = "",
    ):
        missing = [x for x in universe.points if x not in assignment]
        if missing:
            raise StructuralError(f"no algebra assigned at point {missing[0]!r}")
        extra = [x for x in assignment if x not in universe]
        if extra:
            raise StructuralError(f"algebra assigned at unknown point {extra[0]!r}")
        self.universe = universe
        self.assignment = dict(assignment)
        self.name = name

    def algebra_at(self, point: Point) -> AlgebraHandle:
        try:
            return self.assignment[point]
        except KeyError:
            raise DomainError(f"point {point!r} is not in the universe") from None

    def compatible(self, other: "AlgebraFamily") -> bool:
        if self is other:
            return True
        return self.universe == other.universe and all(
            self.assignment[x] is other.assignment[x] for x in self.universe.points
        )

    def __repr__(self):
        label = self.name or "family"
        return f"AlgebraFamily({label!r}, {len(self.universe)} points)"


def constant_family(points: Iterable[Point], algebra: AlgebraHandle, name: str = "") -> AlgebraFamily:
    """Family assigning the same algebra at every point."""
    universe = Universe(tuple(points))
    return AlgebraFamily(universe, {x: algebra for x in universe.points}, name=name)


class ModernSet:
    """Membership map from points to per-point carrier elements.

    Construct through :func:`modern_set`, which validates every value
    against its point's carrier; operations construct results directly and
    check only the freshly computed values.
    """

    __slots__ = ("family", "_values")

    def __init__(self, family: AlgebraFamily, values: dict[Point, Element]):
        self.family = family
        self._values = values

    @property
    def membership(self) -> Mapping[Point, Element]:
        return MappingProxyType(self._values)

    def value_at(self, point: Point) -> Element:
        if point not in self._values:
            raise DomainError(f"point {point!r} is not in the universe")
        return self._values[point]

    def __eq__(self, other):
        if not isinstance(other, ModernSet):
            return NotImplemented
        return self.family is other.family and self._values == other._values

    def __hash__(self):
        return hash((id(self.family), frozenset(self._values.items())))

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersection(self, other)

    def __invert__(self):
        return complement(self)

    def issubset(self, other: "ModernSet") -> bool:
        return contains(other, self)

    def describe(self) -> str:
        parts = ", ".join(
            f"{x!r}: {render_element(self._values[x])}" for x in self.family.universe.points
        )
        return "{" + parts + "}"

    def __repr__(self):
        return f"ModernSet({self.describe()})"


def modern_set(family: AlgebraFamily, membership: Mapping[Point, Element]) -> ModernSet:
    """Validating constructor: every point covered, every value in carrier."""
    values: dict[Point, Element] = {}
    for x in family.universe.points:
        if x not in membership:
            raise DomainError(f"no membership value given at point {x!r}")
        v = membership[x]
        alg = family.algebra_at(x)
        if not alg.is_member(v):
            raise DomainError(
                f"value {render_element(v)} at point {x!r} is not in the carrier "
                f"of algebra {alg.name!r}"
            )
        values[x] = v
    for x in membership:
        if x not in family.universe:
            raise DomainError(f"membership given at unknown point {x!r}")
    return ModernSet(family, values)


def empty_set(family: AlgebraFamily) -> ModernSet:
    """Every point at its algebra's O."""
    return ModernSet(family, {x: family.algebra_at(x).zero for x in family.universe.points})


def full_set(family: AlgebraFamily) -> ModernSet:
    """Every point at its algebra's I."""
    return ModernSet(family, {x: family.algebra_at(x).one for x in family.universe.points})


def embed_crisp(family: AlgebraFamily, members: Iterable[Point]) -> ModernSet:
    """Plain subset of the universe as a modern set: I on members, O off."""
    chosen = set(members)
    for x in chosen:
        if x not in family.universe:
            raise DomainError(f"point {x!r} is not in the universe")
    return ModernSet(
        family,
        {
            x: (family.algebra_at(x).one if x in chosen else family.algebra_at(x).zero)
            for x in family.universe.points
        },
    )


def _require_compatible(a: ModernSet, b: ModernSet) -> None:
    if not a.family.compatible(b.family):
        raise IncompatibleFamilyError(
            "sets over incompatible algebra families cannot be combined"
        )


def _checked(alg: AlgebraHandle, point: Point, value: Element) -> Element:
    if not alg.is_member(value):
        raise StructuralError(
            f"operation of algebra {alg.name!r} left the carrier at point {point!r}: "
            f"{render_element(value)}"
        )
    return value


def union(a: ModernSet, b: ModernSet) -> ModernSet:
    """Pointwise vee; the left set supplies the left operand."""
    _require_compatible(a, b)
    values = {}
    for x in a.family.universe.points:
        alg = a.family.algebra_at(x)
        values[x] = _checked(alg, x, alg.vee(a._values[x], b._values[x]))
    return ModernSet(a.family, values)


def intersection(a: ModernSet, b: ModernSet) -> ModernSet:
    """Pointwise wedge; the left set supplies the left operand."""
    _require_compatible(a, b)
    values = {}
    for x in a.family.universe.points:
        alg = a.family.algebra_at(x)
        values[x] = _checked(alg, x, alg.wedge(a._values[x], b._values[x]))
    return ModernSet(a.family, values)


def complement(a: ModernSet) -> ModernSet:
    """Pointwise complement; every point's algebra must declare one."""
    values = {}
    for x in a.family.universe.points:
        alg = a.family.algebra_at(x)
        if alg.complement is None:
            raise UnsupportedOperationError(
                f"algebra {alg.name!r} at point {x!r} declares no complement"
            )
        values[x] = _checked(alg, x, alg.complement(a._values[x]))
    return ModernSet(a.family, values)


def equals(a: ModernSet, b: ModernSet) -> bool:
    """Pointwise equality of membership values."""
    _require_compatible(a, b)
    return all(a._values[x] == b._values[x] for x in a.family.universe.points)


def is_empty(a: ModernSet) -> bool:
    """True when every point sits at its algebra's O."""
    return all(
        a._values[x] == a.family.algebra_at(x).zero for x in a.family.universe.points
    )


def contains(a: ModernSet, b: ModernSet) -> bool:
    """b sits inside a: at every point, b's value is below a's.

    Needs a declared order at every point; the first unordered point is
    named in the error.
    """
    _require_compatible(a, b)
    for x in a.family.universe.points:
        alg = a.family.algebra_at(x)
        if alg.leq is None:
            raise UnsupportedOperationError(
                f"algebra {alg.name!r} at point {x!r} declares no order"
            )
        if not alg.leq(b._values[x], a._values[x]):
            return False
    return True


# ---------------------------------------------------------------------------
# Crisp restriction


def verify_crisp_restriction(family: AlgebraFamily, universe_size_cap: int = 4) -> LawReport:
    """Check that crisp sets over the family behave as ordinary subsets.

    Every subset of the universe is embedded (I on members, O off). Pair
    stage: each union and intersection must land back on a crisp set and
    match the frozenset oracle. Triple stage: associativity and both
    distributive laws are then re-run over the recorded result tables as
    integer lookups, and complements (where declared at every point) must
    match set difference, giving excluded middle and non-contradiction.
    """
    points = family.universe.points
    n = len(points)
    if n > universe_size_cap:
        raise PreconditionError(
            f"crisp restriction check enumerates all 2^|X| subsets; "
            f"|X| = {n} exceeds the cap {universe_size_cap}"
        )
    masks = range(1 << n)
    embedded = [
        embed_crisp(family, [points[i] for i in range(n) if mask & (1 << i)])
        for mask in masks
    ]

    def mask_of(s: ModernSet) -> int | None:
        out = 0
        for i, x in enumerate(points):
            alg = family.algebra_at(x)
            v = s._values[x]
            if v == alg.one:
                out |= 1 << i
            elif v != alg.zero:
                return None
        return out

    def subset_label(mask: int) -> str:
        chosen = [repr(points[i]) for i in range(n) if mask & (1 << i)]
        return "{" + ", ".join(chosen) + "}"

    def fail(note: str, a_mask: int, b_mask, lhs, rhs) -> LawReport:
        inputs = (subset_label(a_mask),) if b_mask is None else (
            subset_label(a_mask),
            subset_label(b_mask),
        )
        witness = Witness(inputs=inputs, lhs=lhs, rhs=rhs, note=note)
        return LawReport("crisp-restriction", Verdict.fails(witness))

    union_table = [[0] * (1 << n) for _ in masks]
    meet_table = [[0] * (1 << n) for _ in masks]
    for a in masks:
        for b in masks:
            u = mask_of(union(embedded[a], embedded[b]))
            if u is None:
                return fail("union left the crisp sets", a, b, "non-crisp", "crisp")
            if u != a | b:
                return fail(
                    "union disagrees with subset union",
                    a, b, subset_label(u), subset_label(a | b),
                )
            w = mask_of(intersection(embedded[a], embedded[b]))
            if w is None:
                return fail("intersection left the crisp sets", a, b, "non-crisp", "crisp")
            if w != a & b:
                return fail(
                    "intersection disagrees with subset intersection",
                    a, b, subset_label(w), subset_label(a & b),
                )
            union_table[a][b] = u
            meet_table[a][b] = w

    full = (1 << n) - 1
    has_complement = all(family.algebra_at(x).complement is not None for x in points)
    if has_complement:
        for a in masks:
            c = mask_of(complement(embedded[a]))
            if c is None or c != full ^ a:
                got = "non-crisp" if c is None else subset_label(c)
                return fail(
                    "complement disagrees with subset complement",
                    a, None, got, subset_label(full ^ a),
                )

    for a in masks:
        for b in masks:
            if union_table[a][meet_table[a][b]] != a:
                return fail(
                    "absorption fails on crisp sets",
                    a, b, subset_label(union_table[a][meet_table[a][b]]), subset_label(a),
                )
            if meet_table[a][union_table[a][b]] != a:
                return fail(
                    "absorption fails on crisp sets",
                    a, b, subset_label(meet_table[a][union_table[a][b]]), subset_label(a),
                )
            for c in masks:
                if union_table[a][union_table[b][c]] != union_table[union_table[a][b]][c]:
                    return fail(
                        "union associativity fails on crisp sets",
                        a, b, subset_label(union_table[a][union_table[b][c]]),
                        subset_label(union_table[union_table[a][b]][c]),
                    )
                if meet_table[a][meet_table[b][c]] != meet_table[meet_table[a][b]][c]:
                    return fail(
                        "intersection associativity fails on crisp sets",
                        a, b, subset_label(meet_table[a][meet_table[b][c]]),
                        subset_label(meet_table[meet_table[a][b]][c]),
                    )
                lhs = union_table[a][meet_table[b][c]]
                rhs = meet_table[union_table[a][b]][union_table[a][c]]
                if lhs != rhs:
                    return fail(
                        "distributivity fails on crisp sets",
                        a, b, subset_label(lhs), subset_label(rhs),
                    )
                lhs = meet_table[a][union_table[b][c]]
                rhs = union_table[meet_table[a][b]][meet_table[a][c]]
                if lhs != rhs:
                    return fail(
                        "distributivity fails on crisp sets",
                        a, b, subset_label(lhs), subset_label(rhs),
                    )

    details = (
        ("universe-size", n),
        ("crisp-sets", 1 << n),
        ("complement-checked", has_complement),
    )
    return LawReport("crisp-restriction", Verdict.holds_exhaustive(details=details))
