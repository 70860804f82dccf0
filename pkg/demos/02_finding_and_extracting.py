#!/usr/bin/env python3
"""Searching for violating tuples, and extracting them from oversized families.

Any family larger than (r-1) 2^ceil((r-2)n/(r-1)) must contain a focal
family of size r, and one can be pulled out deterministically: split the
coordinates into r-1 blocks, group members by their projection outside each
block, and pick a member that shares its projection class with someone for
every block.  Its group partners differ from it only inside single blocks,
so their difference masks are pairwise disjoint.
"""

from sunforge import (
    Family,
    extract_focal_from_large,
    extraction_threshold,
    find_focal,
    find_near_sunflower,
    is_focal,
)

# The finders enumerate index tuples depth-first with pruning and return the
# lexicographically first witness.
fam = Family.from_strings(["1000", "0100", "0010", "0001", "1111"])
w = find_near_sunflower(fam, 4)
print("near-sunflower witness:", w.indices, [str(fam[i]) for i in w.indices])

fam2 = Family.from_strings(["00", "01", "10"])
wf = find_focal(fam2, 3)
print("focal witness: focus", str(fam2[wf.focus]), "petals",
      [str(fam2[j]) for j in wf.petals])

# The full 6-cube has 64 members, far above the r=3 threshold of 16.
cube = Family.from_masks(6, range(64))
print("\nthreshold for n=6, r=3:", extraction_threshold(6, 3))
w6 = extract_focal_from_large(cube, 3)
print("extracted focus ", str(cube[w6.focus]))
for j in w6.petals:
    print("extracted petal", str(cube[j]))
print("re-validates:", is_focal(cube, w6.focus, w6.petals))

# Same at n=9 with r=4: threshold 3 * 2^6 = 192 < 512.
cube9 = Family.from_masks(9, range(512))
w9 = extract_focal_from_large(cube9, 4)
print("\nn=9, r=4 extraction:", [str(cube9[i]) for i in w9.indices])
print("re-validates:", is_focal(cube9, w9.focus, w9.petals))
