"""Laws lift pointwise, and counterexamples travel both ways.

A law holds for the sets over a family exactly when it holds in every
per-point algebra. The interesting direction is failure: a single bad
point poisons the whole family, and the engine exhibits that with a pair
of concrete sets that differ only where the algebra misbehaves.
"""

from modernsets import (
    AlgebraFamily,
    Universe,
    check_gf_ring_conditions,
    classical_algebra,
    classify_family,
    constant_family,
    fuzzy_algebra,
    lattice_algebra,
    lift_check,
    m3_lattice,
    matrix_algebra,
    powerset_lattice,
)

# Two points, wildly different membership algebras.
universe = Universe(("stable", "weird"))
family = AlgebraFamily(
    universe,
    {"stable": classical_algebra(), "weird": matrix_algebra(2)},
)

print("== classification of the mixed family ==")
result = classify_family(family)
print(result.describe())

print()
print("== a law that survives the bad point ==")
print(lift_check(family, "commutative-vee", samples=100, seed=0).describe())

print()
print("== and one that does not ==")
report = lift_check(family, "commutative-wedge", samples=100, seed=0)
print(report.describe())
a, b = report.family_verdict.witness.inputs
print("the witness sets agree at the classical point and differ at the matrix point:")
print(f"  A = {a.describe()}")
print(f"  B = {b.describe()}")

# Families whose points are complete Heyting algebras support the full
# ring-of-sets picture: the powerset embeds, crisp operations coincide,
# and the bounds absorb. One M3 point is enough to lose it.
print()
print("== ring-of-sets conditions ==")
comp = {"0": "ab", "a": "b", "b": "a", "ab": "0"}
good = constant_family(("u", "v"), lattice_algebra(powerset_lattice(2), complement=comp))
print(check_gf_ring_conditions(good, samples=50, seed=0).describe())
print()
mixed = AlgebraFamily(
    Universe(("u", "v")),
    {"u": fuzzy_algebra(), "v": lattice_algebra(m3_lattice())},
)
print(check_gf_ring_conditions(mixed, samples=50, seed=0).describe())
