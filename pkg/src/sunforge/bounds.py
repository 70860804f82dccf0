"""Closed-form and numerically optimized size bounds.

Integer and rational bounds use arbitrary-precision arithmetic (ints and
fractions.Fraction); real-valued rates use doubles and are reproducible to
1e-9.  Asymptotic o(1) corrections are never folded into values: a report
carries the exact finite-n quantity and, separately, the per-coordinate
exponential base it approaches.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, log2
from typing import Optional

KINDS = ("ns", "ff")


@dataclass(frozen=True)
class BoundReport:
    """One named bound value with its per-coordinate rate and formula tag."""

    name: str
    value: object  # int, Fraction, or float
    rate: Optional[float]
    formula: str


def ceil_div(a: int, b: int) -> int:
    return -(a // -b)


def focal_upper(n: int, r: int) -> int:
    """(r-1) 2^ceil((r-2)n/(r-1)): no larger family avoids focal r-tuples.

    Also bounds near-sunflower-free and one-sided-focal-free families, since
    focal tuples are near-sunflowers and are focal on both sides.
    """
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    if n < 0:
        raise ValueError(f"length n={n} must be >= 0")
    return (r - 1) << ceil_div((r - 2) * n, r - 1)


def lower_rate(r: int, kind: str) -> float:
    """Per-coordinate base of the random-with-alterations lower bound:
    2/(r+1)^(1/(r-1)) for near-sunflowers, 2/r^(1/(r-1)) for focal."""
    if kind not in KINDS:
        raise ValueError(f"kind {kind!r} not in {KINDS}")
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    base = r + 1 if kind == "ns" else r
    return 2.0 / base ** (1.0 / (r - 1))


def qary_bounds(n: int, r: int, q: int) -> tuple[float, int]:
    """(lower rate, exact upper bound) for q-ary focal-free families:
    q/((q-1)(r-1)+1)^(1/(r-1)) per coordinate and (r-1) q^ceil((r-2)n/(r-1)).
    At q = 2 both reduce to the binary formulas."""
    if q < 2:
        raise ValueError(f"alphabet size q={q} must be >= 2")
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    low = q / ((q - 1) * (r - 1) + 1) ** (1.0 / (r - 1))
    up = (r - 1) * q ** ceil_div((r - 2) * n, r - 1)
    return low, up


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"entropy argument {x} outside [0, 1]")
    if x in (0.0, 1.0):
        return 0.0
    return -x * log2(x) - (1.0 - x) * log2(1.0 - x)


def mrrw_rate(delta: float) -> float:
    """Linear-programming (MRRW) exponent h(1/2 - sqrt(delta (1 - delta)))
    bounding binary codes of minimum distance above delta n; the o(1) term
    is omitted."""
    if not 0.0 <= delta <= 0.5:
        raise ValueError(f"relative distance {delta} outside [0, 1/2]")
    return binary_entropy(0.5 - (delta * (1.0 - delta)) ** 0.5)


def one_sided_uniform_upper(n: int, k: int, r: int) -> Fraction:
    """(r-1) C(n, s)/C(k, s) with s = ceil((r-2)k/(r-1)): own-subset bound on
    k-uniform families with no one-sided focal r-tuple."""
    if not 0 <= k <= n:
        raise ValueError(f"uniformity k={k} outside [0, {n}]")
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    s = ceil_div((r - 2) * k, r - 1)
    return Fraction((r - 1) * comb(n, s), comb(k, s))


def one_sided_asymptotic_base(r: int) -> float:
    """1 + (r-2)/(r-1)^((r-1)/(r-2)): the growth base of the summed bound."""
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    return 1.0 + (r - 2) / (r - 1) ** ((r - 1) / (r - 2))


def one_sided_total_upper(n: int, r: int) -> tuple[Fraction, float]:
    """Exact sum of the uniform bounds over k = 0..n, and the asymptotic
    per-coordinate base the n-th root of the sum approaches."""
    total = Fraction(0)
    for k in range(n + 1):
        total += one_sided_uniform_upper(n, k, r)
    return total, one_sided_asymptotic_base(r)


def kuniform_rate(tol: float = 1e-12) -> tuple[float, float]:
    """Growth constant for k-uniform families with pairwise intersecting
    symmetric differences.

    Maximizes 2^(2 h(x)/(1+2x)) over x in (0, 1/2); the maximizer is the root
    of x = (1-x)^3, located by bisection to the requested tolerance.  Returns
    (x_star, base); base is below 2.148.
    """
    lo, hi = 0.0, 0.5
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid - (1.0 - mid) ** 3 < 0.0:
            lo = mid
        else:
            hi = mid
    x_star = (lo + hi) / 2
    base = 2.0 ** (2.0 * binary_entropy(x_star) / (1.0 + 2.0 * x_star))
    return x_star, base


def kuniform_size_bound(k: int, t: int) -> int:
    """sum_{j=0}^{t+1} C(2(k-t), j): the image-count bound used by the
    k-uniform size inequality."""
    if not 0 <= t <= k:
        raise ValueError(f"intersection size t={t} outside [0, {k}]")
    return sum(comb(2 * (k - t), j) for j in range(t + 2))


def count_bound(n: int, r: int, kind: str) -> Fraction:
    """Exact rational violating-tuple bound: (2r+2)^n/r! or (2r)^n/(r-1)!."""
    if kind not in KINDS:
        raise ValueError(f"kind {kind!r} not in {KINDS}")
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    if kind == "ns":
        return Fraction((2 * r + 2) ** n, factorial(r))
    return Fraction((2 * r) ** n, factorial(r - 1))


# ---------------------------------------------------------------------------
# Report grids for the CLI
# ---------------------------------------------------------------------------


def report_grid(
    ns=(), rs=(), qs=(), ks=()
) -> list[BoundReport]:
    """Bound table over the cartesian grid of supplied parameter lists.

    Emits, per r: the upper-bound rate and lower rates; per (n, r): the exact
    upper value; per (r, q) and (n, r, q): the q-ary analogues; per (n, k, r):
    the uniform one-sided bound; per r: the summed one-sided base; plus one
    grid-independent row for the k-uniform intersecting-difference constant.
    """
    rows: list[BoundReport] = []
    for r in rs:
        rows.append(
            BoundReport(
                name=f"upper-rate r={r}",
                value=2.0 ** ((r - 2) / (r - 1)),
                rate=2.0 ** ((r - 2) / (r - 1)),
                formula="2^((r-2)/(r-1))",
            )
        )
        for kind in KINDS:
            rows.append(
                BoundReport(
                    name=f"lower-rate {kind} r={r}",
                    value=lower_rate(r, kind),
                    rate=lower_rate(r, kind),
                    formula=(
                        "2/(r+1)^(1/(r-1))" if kind == "ns" else "2/r^(1/(r-1))"
                    ),
                )
            )
        rows.append(
            BoundReport(
                name=f"one-sided-base r={r}",
                value=one_sided_asymptotic_base(r),
                rate=one_sided_asymptotic_base(r),
                formula="1+(r-2)/(r-1)^((r-1)/(r-2))",
            )
        )
        for n in ns:
            rows.append(
                BoundReport(
                    name=f"upper n={n} r={r}",
                    value=focal_upper(n, r),
                    rate=2.0 ** ((r - 2) / (r - 1)),
                    formula="(r-1)*2^ceil((r-2)n/(r-1))",
                )
            )
            for kind in KINDS:
                rows.append(
                    BoundReport(
                        name=f"count-bound {kind} n={n} r={r}",
                        value=count_bound(n, r, kind),
                        rate=float(2 * r + 2 if kind == "ns" else 2 * r),
                        formula=(
                            "(2r+2)^n/r!" if kind == "ns" else "(2r)^n/(r-1)!"
                        ),
                    )
                )
        for q in qs:
            low, _ = qary_bounds(0, r, q)
            rows.append(
                BoundReport(
                    name=f"q-lower-rate r={r} q={q}",
                    value=low,
                    rate=low,
                    formula="q/((q-1)(r-1)+1)^(1/(r-1))",
                )
            )
            for n in ns:
                _, up = qary_bounds(n, r, q)
                rows.append(
                    BoundReport(
                        name=f"q-upper n={n} r={r} q={q}",
                        value=up,
                        rate=float(q) ** ((r - 2) / (r - 1)),
                        formula="(r-1)*q^ceil((r-2)n/(r-1))",
                    )
                )
        for n in ns:
            for k in ks:
                if k <= n:
                    rows.append(
                        BoundReport(
                            name=f"one-sided n={n} k={k} r={r}",
                            value=one_sided_uniform_upper(n, k, r),
                            rate=None,
                            formula="(r-1)*C(n,s)/C(k,s), s=ceil((r-2)k/(r-1))",
                        )
                    )
    if rows:
        x_star, base = kuniform_rate()
        rows.append(
            BoundReport(
                name="kuniform-diff-rate",
                value=base,
                rate=base,
                formula="max 2^(2h(x)/(1+2x)) at x=(1-x)^3",
            )
        )
        rows.append(
            BoundReport(
                name="kuniform-diff-x",
                value=x_star,
                rate=None,
                formula="root of x=(1-x)^3 in (0, 1/2)",
            )
        )
    return rows
