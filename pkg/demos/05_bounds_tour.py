#!/usr/bin/env python3
"""Tour of the closed-form bound calculators.

All integer and rational bounds are exact (arbitrary precision); the real
constants are double precision.  The interesting r=4 snapshot: focal-free
and near-sunflower-free families grow at most like 2^(2n/3), and at least
like 2^(n/3) and (8/5)^(n/3).
"""

from math import log2

from sunforge import (
    binary_entropy,
    focal_upper,
    kuniform_rate,
    kuniform_size_bound,
    lower_rate,
    mrrw_rate,
    one_sided_total_upper,
    one_sided_uniform_upper,
    qary_bounds,
)

print("r=4 rates per coordinate:")
print(f"  upper          2^(2/3)     = {2 ** (2 / 3):.6f}")
print(f"  lower (ns)     (8/5)^(1/3) = {lower_rate(4, 'ns'):.6f}")
print(f"  lower (ff)     2^(1/3)     = {lower_rate(4, 'ff'):.6f}")

print("\nexact upper bounds (r-1) 2^ceil((r-2)n/(r-1)):")
for n in (0, 6, 9, 12):
    print(f"  n={n:2d}: r=3 -> {focal_upper(n, 3):6d}   r=4 -> {focal_upper(n, 4):6d}")

print("\nq-ary bounds at r=3:")
for q in (2, 4, 5, 8):
    low, up = qary_bounds(4, 3, q)
    print(f"  q={q}: lower rate {low:.4f}, upper(n=4) {up}")

# The entropy-based exponent for codes with large minimum distance; used to
# peel three pairwise disjoint differences out of any 2^(0.44n)-sized family.
print("\nlinear-programming rate h(1/2 - sqrt(d(1-d))):")
for delta in (0.213, 0.287):
    print(f"  delta={delta}: {mrrw_rate(delta):.5f}")
print(f"  sanity: h(1/2) = {binary_entropy(0.5)}")

# One-sided focal bounds: exact per-uniformity value and the summed base.
print("\none-sided uniform bound (r-1) C(n,s)/C(k,s):")
for n, k, r in [(6, 3, 3), (10, 5, 3), (10, 5, 4)]:
    v = one_sided_uniform_upper(n, k, r)
    print(f"  n={n}, k={k}, r={r}: {v} = {float(v):.2f}")
for r in (3, 4):
    total, base = one_sided_total_upper(30, r)
    print(f"  summed bound at n=30, r={r}: {float(total):.4g};"
          f" asymptotic base {base:.4f} (log2 = {log2(base):.4f})")

# k-uniform families with pairwise intersecting symmetric differences grow
# at most like base^k with base just below 2.148, versus the easy 4^k.
x_star, base = kuniform_rate()
print(f"\nk-uniform intersecting-difference constant:")
print(f"  x* = {x_star:.12f} solves x = (1-x)^3")
print(f"  base = {base:.6f} < 2.148; naive bound would be 4^k")
print(f"  size bound at k=10, t=3: {kuniform_size_bound(10, 3)}")
