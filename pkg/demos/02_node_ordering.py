#!/usr/bin/env python3
"""The node ordering and its U/D-labeling witnesses.

Order the doubled simple-root representatives so that whatever U/D labels
an adversary puts on a prefix, some pair (sigma, mu) survives: mu - sigma
is the focus node, no root-or-zero sits below sigma along a D-node, and
none sits above it along a U-node.
"""

from obstructor import (
    Labeling,
    build_root_system,
    construct_witness,
    diagram_order,
    exhaustive_verify,
    verify_witness,
)

# The chain family is ordered linearly; families with a distinguished node
# peel it first and recurse on what is left.
for fam, rank in [("A", 4), ("C", 4), ("BC", 3), ("D", 5), ("E8", 8), ("F4", 4)]:
    rs = build_root_system((fam, rank))
    name = rs.components[0].name
    print(f"{name:3} order: {diagram_order(rs)}")

# Constructive witnesses.  On the doubled rank-one system the witness drops
# by the full double: sigma = -2a, mu = 0.
bc1 = build_root_system(("BC", 1))
lab = Labeling.from_prefix(diagram_order(bc1), "D")
print("\nBC1 witness:", construct_witness(bc1, lab))

# For a chain, sigma is the negative of the maximal run of D-labels ending
# at the focus.
a3 = build_root_system(("A", 3))
order = diagram_order(a3)
for letters in (("D", "D", "D"), ("U", "D", "D"), ("U", "U", "D")):
    lab = Labeling.from_prefix(order, letters)
    w = construct_witness(a3, lab)
    print(f"A3 labels {letters}: sigma={w.sigma} mu={w.mu}")

# The verifier is independent of the construction and reports violations.
bad = verify_witness(a3, Labeling.from_prefix(order, ("D",)),
                     construct_witness(a3, Labeling.from_prefix(order, ("D",))))
print("\nconstructed witness verifies:", bad.ok)
from obstructor import Witness
report = verify_witness(a3, Labeling.from_prefix(order, ("D",)), Witness((0, 0, 0), (1, 0, 0)))
print("sigma = 0 fails with violations:", report.violations[:2], "...")

# Exhaustive verification walks every labeling of every prefix and searches
# witnesses by brute force, so it does not trust the construction.
print()
for fam, rank in [("A", 2), ("G2", 2), ("BC", 4), ("E8", 8)]:
    rs = build_root_system((fam, rank))
    rep = exhaustive_verify(rs, name=rs.components[0].name)
    print(f"{rep.name:3}: {rep.labelings_checked} labelings, "
          f"{rep.witnesses_found} witnesses, "
          f"{'PASS' if rep.passed else 'FAIL'} ({rep.elapsed_s * 1000:.0f} ms)")
