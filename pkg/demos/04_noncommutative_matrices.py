"""Membership degrees that do not commute.

Square rational matrices form a weak Boolean algebra when wedge is
matrix product and vee is matrix sum, each followed by a normalization
that collapses every positive integer multiple of the identity back to
the identity (so I vee I = I rather than 2I). The cost of that collapse
is steep: normalization is not a congruence, and almost every familiar
law breaks somewhere.
"""

from modernsets import (
    RationalMatrix,
    check_all_laws,
    find_noncommuting_witness,
    matrix_algebra,
    matrix_vee,
    matrix_wedge,
    normalize_matrix,
)

mat2 = matrix_algebra(2)
I = RationalMatrix.identity(2)
E01 = RationalMatrix([[0, 1], [0, 0]])

print("== normalization ==")
print(f"I + I          = {I + I}")
print(f"normalized     = {normalize_matrix(I + I)}")
print(f"I vee I        = {matrix_vee(I, I)}")
print(f"E01 + E01      = {matrix_vee(E01, E01)}   (not an identity multiple: untouched)")

print()
print("== wedge does not commute ==")
witness = find_noncommuting_witness(mat2, op="wedge")
x, y = witness.inputs
print(f"x              = {x}")
print(f"y              = {y}")
print(f"x wedge y      = {matrix_wedge(x, y)}")
print(f"y wedge x      = {matrix_wedge(y, x)}")

print()
print("== and normalization breaks associativity of vee ==")
# (I vee I) vee E01 collapses the doubled identity first; I vee (I vee E01)
# never produces an identity multiple, so the doubling survives.
left = matrix_vee(matrix_vee(I, I), E01)
right = matrix_vee(I, matrix_vee(I, E01))
print(f"(I vee I) vee E01 = {left}")
print(f"I vee (I vee E01) = {right}")

print()
print("== the complete verdict table ==")
for report in check_all_laws(mat2, samples=300, seed=0):
    print(f"  {report.describe()}")
