"""What the axioms do and do not promise.

A weak Boolean algebra fixes only the behaviour of the two distinguished
elements O and I under wedge and vee: eight table entries, nothing more.
Everything else (commutativity, distributivity, even idempotence) is up
for grabs, which is exactly why a law-checking engine is worth having.
"""

from modernsets import FiniteAlgebraTable, check_wba_axioms, check_all_laws

# A hand-written two-element algebra, the smallest interesting carrier.
bool2 = FiniteAlgebraTable(
    name="bool2",
    elements=("F", "T"),
    zero_token="F",
    one_token="T",
    wedge_table={
        ("F", "F"): "F", ("F", "T"): "F", ("T", "F"): "F", ("T", "T"): "T",
    },
    vee_table={
        ("F", "F"): "F", ("F", "T"): "T", ("T", "F"): "T", ("T", "T"): "T",
    },
    complement_table={"F": "T", "T": "F"},
).as_handle()

print("== axiom check on a correct table ==")
print(check_wba_axioms(bool2).describe())

# Corrupt one cell that the axioms actually read.
broken = FiniteAlgebraTable(
    name="broken",
    elements=("F", "T"),
    zero_token="F",
    one_token="T",
    wedge_table={
        ("F", "F"): "F", ("F", "T"): "F", ("T", "F"): "F", ("T", "T"): "T",
    },
    vee_table={
        ("F", "F"): "F", ("F", "T"): "F",  # should be T
        ("T", "F"): "T", ("T", "T"): "T",
    },
).as_handle()

print()
print("== axiom check on a corrupted table ==")
report = check_wba_axioms(broken)
print(report.describe())
for violation in report.violations:
    print(f"  inputs {violation.inputs}: expected {violation.expected}, got {violation.actual}")

# A four-element table that passes the axioms while breaking idempotence:
# the axioms constrain O and I only, so the extra elements may do anything.
quirky = FiniteAlgebraTable(
    name="quirky",
    elements=("O", "p", "q", "I"),
    zero_token="O",
    one_token="I",
    wedge_table={
        (x, y): ("O" if "O" in (x, y) else
                 y if x == "I" else
                 x if y == "I" else
                 "q")  # p wedge p = q, and so on: no idempotence
        for x in ("O", "p", "q", "I")
        for y in ("O", "p", "q", "I")
    },
    vee_table={
        (x, y): ("I" if "I" in (x, y) else
                 y if x == "O" else
                 x if y == "O" else
                 "p")
        for x in ("O", "p", "q", "I")
        for y in ("O", "p", "q", "I")
    },
).as_handle()

print()
print("== the axioms say nothing about the other elements ==")
print(check_wba_axioms(quirky).describe())
for report in check_all_laws(quirky):
    print(f"  {report.describe()}")
