#!/usr/bin/env python3
"""Tour of the root-system layer.

Roots live in integer coordinates over the ordered simple roots, so the
simple roots themselves are unit vectors.  Unreduced systems double one of
the nodes; reducible systems concatenate blocks.
"""

import json

from obstructor import build_root_system

# A small reduced system: every root of A_2 is +-(a1), +-(a2), +-(a1+a2).
a2 = build_root_system(("A", 2))
print("A2 positive roots:", sorted(a2.positive_roots))
print("A2 contains a1+a2:", a2.is_element((1, 1)), "| contains 2*a1:", a2.is_element((2, 0)))

# The unreduced family keeps both a root and its double.  The doubled
# representative of the last node is the long vector.
bc3 = build_root_system(("BC", 3))
print("\nBC3 has", len(bc3.positive_roots), "positive roots")
print("doubled representative of the last node:", bc3.hat(2))
print("largest root:", max(bc3.positive_roots, key=sum))

# Column data: positive roots supported on the first i+1 nodes and
# genuinely involving node i.  For the A family these are literal matrix
# columns, which is where their dimensions come from.
a4 = build_root_system(("A", 4))
print("\nA4 column dimensions:", [a4.column_dimension(i) for i in range(4)])

c4 = build_root_system(("C", 4))
print("C4 column dimensions:", [c4.column_dimension(i) for i in range(4)])
print("C4 last column has", len(c4.column_roots(3)), "roots (the symmetric block)")

# Multiplicities weight the column dimensions; the quadratic-form catalog
# uses this for the short roots.
b3 = build_root_system(("B", 3))
shorts = [v for v in b3.positive_roots if v[2] == 1 and all(x in (0, 1) for x in v)]
weighted = build_root_system(("B", 3), multiplicities={v: 4 for v in shorts})
print("\nB3 column dims, short roots weighted by 4:",
      [weighted.column_dimension(i) for i in range(3)])

# Reducible systems are block-diagonal unions.
mixed = build_root_system([("A", 2), ("C", 2)])
print("\nA2+C2 rank:", mixed.rank, "positives:", len(mixed.positive_roots))

# Serialization is plain JSON.
print("\nC2 as JSON:")
print(json.dumps(build_root_system(("C", 2)).to_json(), indent=2))
