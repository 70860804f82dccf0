"""Constructive family generators.

Two routes to large violation-free families: evaluation codes over a finite
field (all polynomials of bounded degree evaluated at fixed points, so two
members agree on fewer coordinates than the degree bound), and random choice
with alterations (sample every vector independently, then delete one member
of each violating tuple until none remains).

All randomness flows from a single 64-bit seed through the counter-based
Philox generator, so identical parameters reproduce identical families on
any platform.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Optional

import numpy as np

from .bitfam import Family, QFamily, QVector
from .detect import find_focal, find_near_sunflower
from .gf import Field

KINDS = ("ns", "ff")  # near-sunflower / focal family

DEFAULT_MEMBER_CAP = 1 << 16
DEFAULT_EXPECTED_CAP = 1024.0
MATRIX_ENUM_BITS = 24


def degree_bound(n: int, r: int) -> int:
    """ceil((r-2) n / (r-1)): the agreement threshold of the evaluation code."""
    return -((r - 2) * n // -(r - 1))


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind {kind!r} not in {KINDS}")


# ---------------------------------------------------------------------------
# Reed-Solomon style evaluation families
# ---------------------------------------------------------------------------


def reed_solomon_family(
    field: Field,
    n: int,
    r: int,
    member_cap: int = DEFAULT_MEMBER_CAP,
    sample_size: Optional[int] = None,
    seed: int = 0,
) -> QFamily:
    """Evaluations of all degree-< d polynomials at the first n field elements.

    d = ceil((r-2) n / (r-1)).  Two distinct polynomials of degree below d
    agree on fewer than d points, so by pigeonhole no member can serve as the
    focus of a focal family of size r.  Requires q >= n so that n distinct
    evaluation points exist.  When the full space q^d exceeds member_cap, a
    Philox-seeded uniform sample of sample_size polynomials is emitted
    instead; without sample_size the call is rejected.
    """
    q = field.q
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    if q < n:
        raise ValueError(f"field order q={q} is below the length n={n}")
    if q > 256:
        raise ValueError(f"field order q={q} exceeds the one-byte symbol range")
    d = degree_bound(n, r)
    total = q**d
    points = list(field.elements())[:n]
    if total <= member_cap:
        poly_codes = range(total)
    elif sample_size is not None:
        rng = np.random.Generator(np.random.Philox(key=seed))
        chosen = set()
        while len(chosen) < min(sample_size, total):
            chosen.add(int(rng.integers(0, total)))
        poly_codes = sorted(chosen)
    else:
        raise ValueError(
            f"q^d = {total} exceeds member_cap={member_cap}; pass sample_size to sample"
        )

    members = []
    for code in poly_codes:
        coeffs = []
        t = code
        for _ in range(d):
            coeffs.append(t % q)
            t //= q
        syms = bytes(field.eval_poly(coeffs, a) for a in points)
        members.append(QVector(q, syms))
    return QFamily(n, q, members)


# ---------------------------------------------------------------------------
# Random choice with alterations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlterationTrace:
    """Provenance of one random-with-alterations run."""

    seed: int
    p_used: float
    initial_size: int
    removals: int
    kind: str

    @property
    def final_size(self) -> int:
        return self.initial_size - self.removals


def violating_tuple_bound(n: int, r: int, kind: str):
    """Upper bound on the number of violating r-tuples in the full cube:
    (2r+2)^n / r! for near-sunflowers, (2r)^n / (r-1)! for focal families."""
    _check_kind(kind)
    if kind == "ns":
        return (2 * r + 2) ** n / factorial(r)
    return (2 * r) ** n / factorial(r - 1)


def optimal_p(n: int, r: int, kind: str) -> float:
    """Exact maximizer of the expected surviving size 2^n p - M p^r.

    M is the violating-tuple bound for the kind; the maximizer is
    (2^n / (r M))^(1/(r-1)), clamped into (0, 1].
    """
    _check_kind(kind)
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    if kind == "ns" and r == 3:
        warnings.warn(
            "every 3 distinct vectors form a near-sunflower; "
            "the ns construction is degenerate for r=3",
            stacklevel=2,
        )
    m_bound = violating_tuple_bound(n, r, kind)
    p_star = (2.0**n / (r * m_bound)) ** (1.0 / (r - 1))
    return min(1.0, p_star)


def expected_size_lower_bound(n: int, r: int, kind: str, p: float) -> float:
    """Analytic lower bound 2^n p - M p^r on the expected surviving size."""
    return 2.0**n * p - violating_tuple_bound(n, r, kind) * p**r


def random_with_alterations(
    n: int,
    r: int,
    kind: str,
    seed: int,
    p: Optional[float] = None,
    expected_cap: float = DEFAULT_EXPECTED_CAP,
) -> tuple[Family, AlterationTrace]:
    """Sample each vector of the cube with probability p, then repeatedly
    remove the highest-index member of a violating tuple until none remains.

    The returned family is certified violation-free by the detect finders.
    """
    _check_kind(kind)
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    if p is None:
        p = optimal_p(n, r, kind)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"inclusion probability {p} outside [0, 1]")
    if n > 24:
        raise ValueError(f"cube dimension n={n} too large to enumerate")
    if 2.0**n * p > expected_cap:
        raise ValueError(
            f"expected size 2^n p = {2.0 ** n * p:.1f} exceeds cap {expected_cap}"
        )
    rng = np.random.Generator(np.random.Philox(key=seed))
    draws = rng.random(1 << n)
    masks = [v for v in range(1 << n) if draws[v] < p]
    initial = len(masks)
    removals = 0
    fam = Family.from_masks(n, masks)
    while True:
        if kind == "ns":
            witness = find_near_sunflower(fam, r)
        else:
            witness = find_focal(fam, r)
        if witness is None:
            break
        drop = max(witness.indices)
        masks = [m for i, m in enumerate(fam.masks) if i != drop]
        fam = Family.from_masks(n, masks)
        removals += 1
    trace = AlterationTrace(
        seed=seed, p_used=p, initial_size=initial, removals=removals, kind=kind
    )
    return fam, trace


# ---------------------------------------------------------------------------
# Column-condition matrix counting
# ---------------------------------------------------------------------------


def count_matrices(n: int, r: int, kind: str, mode: str = "enumerate") -> int:
    """Number of r x n binary matrices whose every column is admissible.

    ns: column weight in {0, 1, r-1, r}.  ff: at most one of the last r-1
    entries differs from the first.  Enumeration walks all 2^(rn) matrices
    (r n <= 24); closed mode returns (2r+2)^n resp. (2r)^n.  The two modes
    agree, which is the counting identity behind the tuple bounds.
    """
    _check_kind(kind)
    if mode == "closed":
        return (2 * r + 2) ** n if kind == "ns" else (2 * r) ** n
    if mode != "enumerate":
        raise ValueError(f"mode {mode!r} not in ('enumerate', 'closed')")
    bits = r * n
    if bits > MATRIX_ENUM_BITS:
        raise ValueError(f"r*n = {bits} exceeds enumeration cap {MATRIX_ENUM_BITS}")
    if n == 0:
        return 1
    if bits > 16:
        return _count_matrices_np(n, r, kind)
    count = 0
    for x in range(1 << bits):
        ok = True
        for c in range(n):
            col = [(x >> (i * n + c)) & 1 for i in range(r)]
            if kind == "ns":
                w = sum(col)
                ok = w <= 1 or w >= r - 1
            else:
                ok = sum(b != col[0] for b in col[1:]) <= 1
            if not ok:
                break
        count += ok
    return count


def _count_matrices_np(n: int, r: int, kind: str) -> int:
    arr = np.arange(1 << (r * n), dtype=np.uint32)
    ok = np.ones(arr.shape, dtype=bool)
    for c in range(n):
        rows = [((arr >> np.uint32(i * n + c)) & 1).astype(np.uint8) for i in range(r)]
        if kind == "ns":
            w = np.zeros(arr.shape, dtype=np.uint8)
            for row in rows:
                w += row
            ok &= (w <= 1) | (w >= r - 1)
        else:
            diff = np.zeros(arr.shape, dtype=np.uint8)
            for row in rows[1:]:
                diff += row ^ rows[0]
            ok &= diff <= 1
    return int(ok.sum())


# ---------------------------------------------------------------------------
# Screened sampler for k-uniform families with intersecting differences
# ---------------------------------------------------------------------------


def random_condition_family(
    k: int, ground: int, target_size: int, seed: int, max_draws: int = 10_000
) -> Family:
    """Greedy screened sample of k-subsets of [ground] whose member-pair
    symmetric differences pairwise intersect.

    Best-effort generator (no growth-rate guarantee): candidates are drawn
    uniformly and kept only when the condition survives against every
    previously kept pair.
    """
    if not 0 <= k <= ground:
        raise ValueError(f"k={k} outside [0, {ground}]")
    rng = np.random.Generator(np.random.Philox(key=seed))
    kept: list[int] = []
    draws = 0
    while len(kept) < target_size and draws < max_draws:
        draws += 1
        pos = rng.permutation(ground)[:k]
        cand = 0
        for b in pos:
            cand |= 1 << int(b)
        if cand in kept:
            continue
        if _keeps_condition(kept, cand):
            kept.append(cand)
    return Family.from_masks(ground, kept)


def _keeps_condition(kept: list[int], cand: int) -> bool:
    # every new pair {c, cand} must intersect every old pair {a, b} in xor
    for a, b in combinations(kept, 2):
        for c in kept:
            if c in (a, b):
                continue
            if (a ^ b) & (c ^ cand) == 0:
                return False
    return True
