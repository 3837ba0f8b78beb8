"""From crisp truth values to graded membership, one algebra at a time.

The same engine classifies a family of per-point algebras into the
hierarchy classical < fuzzy-like < generalized-fuzzy < L-fuzzy < modern,
most specific label first. The defining structures:

  classical          two elements, Boolean tables
  fuzzy-like         the rational unit interval with min, max, 1 - x
  generalized-fuzzy  any complete Heyting algebra per point
  L-fuzzy            any lattice per point
  modern             anything satisfying the eight identities
"""

from fractions import Fraction

from modernsets import (
    chain_algebra,
    check_all_laws,
    classical_algebra,
    classify_family,
    constant_family,
    fuzzy_algebra,
    lattice_algebra,
    m3_lattice,
    matrix_algebra,
    modern_set,
    union,
    complement,
    full_set,
    equals,
)

print("== the classification ladder ==")
for algebra in (
    classical_algebra(),
    fuzzy_algebra(),
    chain_algebra(3),
    lattice_algebra(m3_lattice()),
    matrix_algebra(2),
):
    fam = constant_family(("x", "y"), algebra)
    result = classify_family(fam)
    print(f"  every point {algebra.name:12s} -> {result.level}")

print()
print("== the fuzzy law profile ==")
for report in check_all_laws(fuzzy_algebra(), samples=500, seed=0):
    print(f"  {report.describe()}")

# Excluded middle fails pointwise at 1/2, and the same failure lifts to
# sets: a set that is half in and half out is not completed by its
# complement.
fam = constant_family(("alice", "bob"), fuzzy_algebra())
member = modern_set(fam, {"alice": Fraction(1, 2), "bob": Fraction(9, 10)})
lhs = union(member, complement(member))
print()
print("== excluded middle fails for fuzzy sets ==")
print(f"A               : {member.describe()}")
print(f"A vee ~A        : {lhs.describe()}")
print(f"the full set    : {full_set(fam).describe()}")
print(f"equal?          : {equals(lhs, full_set(fam))}")
