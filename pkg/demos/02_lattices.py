"""Finite lattices from Hasse diagrams, and what they certify.

The diamond M3 and the pentagon N5 are the canonical non-distributive
lattices; powerset lattices are Boolean; a chain is distributive but has
no complements in the middle. The certificate prints each verdict with a
concrete counterexample whenever a law fails.
"""

from modernsets import (
    check_lattice_laws,
    lattice_from_hasse,
    m3_lattice,
    n5_lattice,
    powerset_lattice,
)

for lat in (m3_lattice(), n5_lattice(), powerset_lattice(3)):
    print(check_lattice_laws(lat).describe())
    print()

# A chain sits strictly between: distributive, even a complete Heyting
# algebra, but not Boolean because the midpoint has no complement.
chain = lattice_from_hasse("chain3", ["0", "m", "1"], [("0", "m"), ("m", "1")])
print(check_lattice_laws(chain).describe())
print()

# Certificates carry re-checkable witnesses, not just verdicts.
cert = check_lattice_laws(m3_lattice())
witness = cert.witnesses["distributive"]
x, y, z = witness.inputs
lat = m3_lattice()
print(f"M3 witness: x={x}, y={y}, z={z}")
print(f"  x vee (y wedge z)          = {lat.join(x, lat.meet(y, z))}")
print(f"  (x vee y) wedge (x vee z)  = {lat.meet(lat.join(x, y), lat.join(x, z))}")

# The frame law (arbitrary joins distribute over a binary meet) is
# strictly stronger than binary distributivity in general, but the two
# agree on finite lattices; the certificate cross-checks both routes.
heyting = dict(check_lattice_laws(powerset_lattice(2)).entries)["complete-heyting"]
print()
print(f"powerset(2) frame law: {heyting.describe()}")
for label, detail in heyting.details:
    print(f"  cross-check {label}: {detail.describe()}")
