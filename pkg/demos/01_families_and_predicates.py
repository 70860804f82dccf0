#!/usr/bin/env python3
"""Families, column profiles, and the three tuple predicates.

A family is an ordered, duplicate-free set of equal-length binary vectors.
For a chosen r-tuple of members, look at each coordinate and count how many
of the r vectors carry a 1 there:

  sunflower        every count is 0, 1, or r
  near-sunflower   every count is 0, 1, r-1, or r
  focal family     one member (the focus) disagrees with at most one of the
                   others in every coordinate
"""

from sunforge import (
    Family,
    column_profile,
    complement_family,
    is_focal,
    is_near_sunflower,
    is_sunflower,
)

# Three pairwise disjoint supports: the classic sunflower with an empty core.
petals = Family.from_strings(["100", "010", "001"])
print("family:", [str(v) for v in petals])
print("column counts:", column_profile(petals, (0, 1, 2)).counts)
print("sunflower?", is_sunflower(petals, (0, 1, 2)))

# Every column holding exactly two ones breaks both predicates for r=3...
triangle = Family.from_strings(["110", "101", "011"])
print("\nfamily:", [str(v) for v in triangle])
print("column counts:", column_profile(triangle, (0, 1, 2)).counts)
print("sunflower?", is_sunflower(triangle, (0, 1, 2)))
# ...but for r=3 the near-sunflower counts {0, 1, 2, 3} allow everything,
# which is why near-sunflowers only become interesting at r >= 4.
print("near-sunflower (r=3)?", is_near_sunflower(triangle, (0, 1, 2)))

# At r=4 a count of 2 = r-2 is the one forbidden value.
quad = Family.from_strings(["1110", "1101", "1011", "0111"])
print("\nfamily:", [str(v) for v in quad])
print("column counts:", column_profile(quad, (0, 1, 2, 3)).counts)
print("near-sunflower (r=4)?", is_near_sunflower(quad, (0, 1, 2, 3)))

# Complementing every member flips each count c to r-c, and the allowed
# count set is symmetric, so the predicate is preserved.
comp = complement_family(quad)
print("complemented:", [str(v) for v in comp])
print("still a near-sunflower?", is_near_sunflower(comp, (0, 1, 2, 3)))

# A focal family: both petals differ from the focus in disjoint coordinates.
fam = Family.from_strings(["00", "01", "10"])
print("\nfamily:", [str(v) for v in fam])
print("focal with focus 00?", is_focal(fam, 0, (1, 2)))
# Two petals touching the same coordinate spoil it.
fam2 = Family.from_strings(["00", "01", "11"])
print("focal with focus 00, petals 01 and 11?", is_focal(fam2, 0, (1, 2)))
