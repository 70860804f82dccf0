#!/usr/bin/env python3
"""Focal-free q-ary families from polynomial evaluation codes.

Take all q^d polynomials of degree below d = ceil((r-2)n/(r-1)) over a field
with q >= n elements and evaluate each at n fixed points.  Distinct
polynomials agree on at most d-1 coordinates; a focal family of size r would
force some petal to agree with the focus on at least d coordinates by
pigeonhole, so none exists.  The family size q^d matches the general upper
bound (r-1) q^d up to the factor r-1.
"""

import numpy as np

from sunforge import degree_bound, find_focal, qary_bounds, reed_solomon_family
from sunforge.gf import Field

# GF(5), n=4, r=3: d = 2, so 25 members.
field = Field.of_order(5)
fam = reed_solomon_family(field, 4, 3)
print("q=5, n=4, r=3: degree bound", degree_bound(4, 3), "->", len(fam), "members")
print("first members:", ", ".join(str(v) for v in list(fam)[:6]), "...")

low, up = qary_bounds(4, 3, 5)
print(f"upper bound {up} = (r-1) * {len(fam)}; lower rate {low:.4f}/coordinate")

print("exhaustive focal search:", find_focal(fam, 3))

# Maximum pairwise agreement stays below the degree bound.
arr = np.frombuffer(b"".join(v.symbols for v in fam), dtype=np.uint8)
arr = arr.reshape(len(fam), fam.n)
worst = max(
    int((arr[i + 1 :] == arr[i]).sum(axis=1).max()) for i in range(len(fam) - 1)
)
print("max pairwise agreement:", worst, "(bound allows", degree_bound(4, 3) - 1, ")")

# Extension fields work the same; GF(4) here, built from its shipped modulus.
f4 = Field.of_order(4)
fam4 = reed_solomon_family(f4, 4, 3)
print("\nq=4, n=4, r=3:", len(fam4), "members;",
      "focal search:", find_focal(fam4, 3))

# A field too small for the length is rejected: evaluation points must be
# distinct field elements.
try:
    reed_solomon_family(Field.of_order(3), 4, 3)
except ValueError as exc:
    print("q < n rejected:", exc)
