"""Detection predicates and constructive finders for vector families.

A tuple of r members is a sunflower when every column count lies in {0, 1, r},
a near-sunflower when it lies in {0, 1, r-1, r}, and focal (with a chosen
focus) when in every coordinate at most one non-focus member disagrees with
the focus.  The focal predicate is implemented through difference masks:
the tuple is focal iff the masks petal xor focus are pairwise disjoint, and
b-focal iff the masks restricted to the focus-side-b coordinates are.

All predicates run on int masks via bitwise accumulators.  For a partial
tuple, a column with at least two ones and at least two zeros can never
return to an allowed count, which doubles as the search pruning rule.

Member indices in witnesses are 0-based positions into the family.
"""

from __future__ import annotations

import json
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence, Union

import numpy as np

from .bitfam import BitVector, Family, QFamily, _checked_indices

AnyFamily = Union[Family, QFamily]

DEFAULT_NODE_CAP = 20_000_000  # finder search nodes before giving up


class CapExceededError(RuntimeError):
    """A finder or counter exceeded its configured enumeration budget."""


class WitnessNotFoundError(LookupError):
    """A constructive routine could not produce the promised witness."""


# ---------------------------------------------------------------------------
# Witness records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NearSunflowerWitness:
    indices: tuple[int, ...]

    def to_json(self) -> str:
        return json.dumps({"kind": "near_sunflower", "indices": list(self.indices)})


@dataclass(frozen=True)
class FocalWitness:
    focus: int
    petals: tuple[int, ...]
    side: str = "both"  # "both" for focal, "0"/"1" for one-sided

    def __post_init__(self) -> None:
        if self.side not in ("both", "0", "1"):
            raise ValueError(f"bad side {self.side!r}")
        if self.focus in self.petals:
            raise ValueError("focus cannot also be a petal")

    @property
    def indices(self) -> tuple[int, ...]:
        return (self.focus,) + self.petals

    def to_json(self) -> str:
        return json.dumps(
            {
                "kind": "focal",
                "focus": self.focus,
                "petals": list(self.petals),
                "side": self.side,
            }
        )


@dataclass(frozen=True)
class DisjointPairsWitness:
    pairs: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]

    def to_json(self) -> str:
        return json.dumps(
            {"kind": "disjoint_symdiffs", "pairs": [list(p) for p in self.pairs]}
        )


def witness_from_json(text: str):
    obj = json.loads(text)
    kind = obj.get("kind")
    if kind == "near_sunflower":
        return NearSunflowerWitness(tuple(obj["indices"]))
    if kind == "focal":
        return FocalWitness(obj["focus"], tuple(obj["petals"]), obj.get("side", "both"))
    if kind == "disjoint_symdiffs":
        return DisjointPairsWitness(tuple(tuple(p) for p in obj["pairs"]))
    raise ValueError(f"unknown witness kind {kind!r}")


# ---------------------------------------------------------------------------
# Mask helpers
# ---------------------------------------------------------------------------


def _seen_twice(masks: Sequence[int]) -> tuple[int, int]:
    """(seen_once, seen_twice) bit accumulators over a mask sequence."""
    once = twice = 0
    for m in masks:
        twice |= once & m
        once |= m
    return once, twice


def _tuple_masks(family: Family, indices: Sequence[int]) -> list[int]:
    idx = _checked_indices(len(family), indices)
    return [family.masks[i] for i in idx]


def _diff_mask(family: AnyFamily, i: int, j: int) -> int:
    """Mask of coordinates where members i and j differ."""
    if isinstance(family, Family):
        return family.masks[i] ^ family.masks[j]
    return family[i].diff_mask(family[j])


def _pairwise_disjoint(masks: Sequence[int]) -> bool:
    union = 0
    for m in masks:
        if m & union:
            return False
        union |= m
    return True


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------


def is_sunflower(family: Family, indices: Sequence[int]) -> bool:
    """True iff every column count over the tuple lies in {0, 1, r}."""
    masks = _tuple_masks(family, indices)
    full = (1 << family.n) - 1
    _, ones_twice = _seen_twice(masks)
    all_and = full
    for m in masks:
        all_and &= m
    # bad column: two or more ones but not all ones
    return ones_twice & (full ^ all_and) == 0


def is_near_sunflower(family: Family, indices: Sequence[int]) -> bool:
    """True iff every column count over the tuple lies in {0, 1, r-1, r}."""
    masks = _tuple_masks(family, indices)
    if len(masks) < 3:
        raise ValueError(f"tuple size {len(masks)} must be >= 3")
    full = (1 << family.n) - 1
    _, ones_twice = _seen_twice(masks)
    _, zeros_twice = _seen_twice([m ^ full for m in masks])
    return ones_twice & zeros_twice == 0


def is_focal(family: AnyFamily, focus: int, petals: Sequence[int]) -> bool:
    """True iff in every coordinate at most one petal differs from the focus.

    Equivalently the difference masks petal xor focus are pairwise disjoint;
    works for binary and q-ary families alike.
    """
    idx = _checked_indices(len(family), (focus, *petals))
    masks = [_diff_mask(family, j, focus) for j in idx[1:]]
    return _pairwise_disjoint(masks)


def is_b_focal(family: Family, focus: int, petals: Sequence[int], b: int) -> bool:
    """One-sided focal check restricted to coordinates where the focus is b."""
    if b not in (0, 1):
        raise ValueError(f"side bit {b} not in {{0,1}}")
    idx = _checked_indices(len(family), (focus, *petals))
    fmask = family.masks[focus]
    side = fmask if b == 1 else fmask ^ ((1 << family.n) - 1)
    masks = [(family.masks[j] ^ fmask) & side for j in idx[1:]]
    return _pairwise_disjoint(masks)


# ---------------------------------------------------------------------------
# Finders
# ---------------------------------------------------------------------------


def find_near_sunflower(
    family: Family,
    r: int,
    node_cap: int = DEFAULT_NODE_CAP,
    workers: int = 1,
    first_index: int | None = None,
) -> Optional[NearSunflowerWitness]:
    """First r-subset (smallest index tuple) forming a near-sunflower.

    Depth-first over index combinations; a branch dies as soon as some column
    has two ones and two zeros among the chosen members, since such a count
    can never climb back to r-1.
    """
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    m = len(family)
    if m < r:
        return None
    if workers > 1 and first_index is None:
        return _parallel_first(
            _ns_task, family, r, node_cap, range(m - r + 1), workers
        )
    masks = family.masks
    full = (1 << family.n) - 1
    nodes = 0
    chosen: list[int] = []

    def dfs(start: int, oo: int, ot: int, zo: int, zt: int) -> bool:
        nonlocal nodes
        if len(chosen) == r:
            return True
        for i in range(start, m - (r - len(chosen)) + 1):
            nodes += 1
            if nodes > node_cap:
                raise CapExceededError(f"near-sunflower search beyond {node_cap} nodes")
            v = masks[i]
            w = v ^ full
            n_ot = ot | (oo & v)
            n_zt = zt | (zo & w)
            if n_ot & n_zt:
                continue
            chosen.append(i)
            if dfs(i + 1, oo | v, n_ot, zo | w, n_zt):
                return True
            chosen.pop()
        return False

    starts = range(m - r + 1) if first_index is None else [first_index]
    for i0 in starts:
        v = masks[i0]
        chosen.append(i0)
        if dfs(i0 + 1, v, 0, v ^ full, 0):
            return NearSunflowerWitness(tuple(chosen))
        chosen.pop()
    return None


def find_focal(
    family: AnyFamily,
    r: int,
    node_cap: int = DEFAULT_NODE_CAP,
    workers: int = 1,
    focus: int | None = None,
) -> Optional[FocalWitness]:
    """First (focus, petal set) choice forming a focal family of size r.

    For each candidate focus the difference masks to all other members are
    computed and a backtracking search looks for r-1 pairwise disjoint ones.
    """
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    m = len(family)
    if m < r:
        return None
    if workers > 1 and focus is None:
        return _parallel_first(_focal_task, family, r, node_cap, range(m), workers)
    nodes = 0

    def search_focus(f: int) -> Optional[tuple[int, ...]]:
        nonlocal nodes
        cands = [(j, _diff_mask(family, j, f)) for j in range(m) if j != f]
        chosen: list[int] = []

        def dfs(start: int, union: int) -> bool:
            nonlocal nodes
            if len(chosen) == r - 1:
                return True
            for t in range(start, len(cands) - (r - 1 - len(chosen)) + 1):
                nodes += 1
                if nodes > node_cap:
                    raise CapExceededError(f"focal search beyond {node_cap} nodes")
                j, d = cands[t]
                if d & union:
                    continue
                chosen.append(j)
                if dfs(t + 1, union | d):
                    return True
                chosen.pop()
            return False

        return tuple(chosen) if dfs(0, 0) else None

    foci = range(m) if focus is None else [focus]
    for f in foci:
        petals = search_focus(f)
        if petals is not None:
            return FocalWitness(f, petals)
    return None


def find_b_focal(
    family: Family, r: int, b: int, node_cap: int = DEFAULT_NODE_CAP
) -> Optional[FocalWitness]:
    """Like find_focal but with masks restricted to the focus-side-b columns."""
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    if b not in (0, 1):
        raise ValueError(f"side bit {b} not in {{0,1}}")
    m = len(family)
    if m < r:
        return None
    full = (1 << family.n) - 1
    nodes = 0
    for f in range(m):
        fmask = family.masks[f]
        side = fmask if b == 1 else fmask ^ full
        cands = [(j, (family.masks[j] ^ fmask) & side) for j in range(m) if j != f]
        chosen: list[int] = []

        def dfs(start: int, union: int) -> bool:
            nonlocal nodes
            if len(chosen) == r - 1:
                return True
            for t in range(start, len(cands) - (r - 1 - len(chosen)) + 1):
                nodes += 1
                if nodes > node_cap:
                    raise CapExceededError(f"b-focal search beyond {node_cap} nodes")
                j, d = cands[t]
                if d & union:
                    continue
                chosen.append(j)
                if dfs(t + 1, union | d):
                    return True
                chosen.pop()
            return False

        if dfs(0, 0):
            return FocalWitness(f, tuple(chosen), side=str(b))
    return None


# -- optional process-pool split of the outer loop, first witness wins -------


def _ns_task(family, r, node_cap, i0):
    return find_near_sunflower(family, r, node_cap, first_index=i0)


def _focal_task(family, r, node_cap, f):
    return find_focal(family, r, node_cap, focus=f)


def _parallel_first(task, family, r, node_cap, outer, workers):
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(task, family, r, node_cap, i) for i in outer]
        pending = set(futures)
        try:
            while pending:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                hits = [f.result() for f in done if f.result() is not None]
                if hits:
                    return hits[0]
        finally:
            for f in pending:
                f.cancel()
    return None


# ---------------------------------------------------------------------------
# Extraction from families above the partition bound
# ---------------------------------------------------------------------------


def partition_blocks(n: int, parts: int) -> list[int]:
    """Consecutive coordinate blocks as masks, sizes floor(n/parts) or +1.

    The first n mod parts blocks take the extra coordinate; block 0 starts at
    coordinate 1 (the most significant bit).
    """
    base, extra = divmod(n, parts)
    blocks = []
    hi = n
    for j in range(parts):
        size = base + (1 if j < extra else 0)
        lo = hi - size
        blocks.append(((1 << hi) - 1) ^ ((1 << lo) - 1))
        hi = lo
    return blocks


def extraction_threshold(n: int, r: int) -> int:
    """Family size above which a focal family of size r can be extracted."""
    d = -((r - 2) * n // -(r - 1))
    return (r - 1) * (1 << d)


def extract_focal_from_large(family: Family, r: int) -> FocalWitness:
    """Deterministic focal-family extraction from an oversized family.

    Coordinates are split into r-1 near-equal blocks.  For each block j the
    members are grouped by their projection onto the other blocks; a member
    alone in its group is unique for that grouping.  Any member non-unique in
    all r-1 groupings yields a focal tuple: petal j is its smallest-index
    group partner for block j, differing from the focus only inside block j.
    """
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    n, m = family.n, len(family)
    threshold = extraction_threshold(n, r)
    if m <= threshold:
        raise ValueError(
            f"family size {m} does not exceed the extraction threshold {threshold}"
        )
    masks = family.masks
    blocks = partition_blocks(n, r - 1)
    full = (1 << n) - 1
    groupings: list[dict[int, list[int]]] = []
    for block in blocks:
        keep = full ^ block
        groups: dict[int, list[int]] = {}
        for i, v in enumerate(masks):
            groups.setdefault(v & keep, []).append(i)
        groupings.append(groups)
    keys = [full ^ b for b in blocks]
    for i, v in enumerate(masks):
        petals = []
        for keep, groups in zip(keys, groupings):
            grp = groups[v & keep]
            if len(grp) < 2:
                break
            petals.append(grp[0] if grp[0] != i else grp[1])
        else:
            witness = FocalWitness(i, tuple(petals))
            if not is_focal(family, witness.focus, witness.petals):
                raise AssertionError("extracted tuple failed focal re-check")
            return witness
    # the pigeonhole argument guarantees a non-unique member above threshold
    raise WitnessNotFoundError("no member is non-unique in all groupings")


# ---------------------------------------------------------------------------
# Three pairwise disjoint symmetric differences
# ---------------------------------------------------------------------------

EXHAUSTIVE_PAIR_LIMIT = 512


def _pack_masks(masks: Sequence[int], n: int) -> np.ndarray:
    words = max(1, (n + 63) // 64)
    arr = np.empty((len(masks), words), dtype=np.uint64)
    for i, m in enumerate(masks):
        for w in range(words):
            arr[i, w] = (m >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return arr


def _min_distance_pair(
    masks: Sequence[int], n: int, ids: Sequence[int]
) -> Optional[tuple[int, int]]:
    """Full pairwise scan for the minimum Hamming distance pair.

    Row-vectorized over numpy; ties break to the lexicographically smallest
    (i, j) id pair, identical to a naive double loop with strict improvement.
    """
    m = len(masks)
    if m < 2:
        return None
    arr = _pack_masks(masks, n)
    best = n + 1
    best_pair = None
    for i in range(m - 1):
        rows = np.bitwise_xor(arr[i + 1 :], arr[i])
        dists = np.bitwise_count(rows).sum(axis=1)
        j_rel = int(np.argmin(dists))
        d = int(dists[j_rel])
        if d < best:
            best = d
            best_pair = (ids[i], ids[i + 1 + j_rel])
    return best_pair


def find_three_disjoint_symdiffs(
    family: Family,
) -> Optional[DisjointPairsWitness]:
    """Three pairs over six distinct members with pairwise disjoint xors.

    Staged procedure: take a minimum-distance pair (A, B); bucket the other
    members by their intersection with A xor B and keep a largest bucket
    (members of one bucket automatically differ outside A xor B); take a
    minimum-distance pair (C, D) inside it; bucket the rest by intersection
    with the union of both differences and return any two members sharing a
    bucket.  Falls back to an exhaustive matching search for small families,
    which makes the result complete up to EXHAUSTIVE_PAIR_LIMIT members.
    """
    staged = _three_disjoint_staged(family)
    if staged is not None:
        return staged
    if len(family) <= EXHAUSTIVE_PAIR_LIMIT:
        return _three_disjoint_exhaustive(family)
    return None


def _three_disjoint_staged(family: Family) -> Optional[DisjointPairsWitness]:
    masks = family.masks
    m = len(masks)
    if m < 6:
        return None
    n = family.n
    first = _min_distance_pair(masks, n, range(m))
    if first is None:
        return None
    a, b = first
    d1 = masks[a] ^ masks[b]

    rest = [i for i in range(m) if i not in (a, b)]
    buckets: dict[int, list[int]] = {}
    for i in rest:
        buckets.setdefault(masks[i] & d1, []).append(i)
    key = min(
        buckets, key=lambda k: (-len(buckets[k]), k)
    )
    group = buckets[key]
    if len(group) < 2:
        return None
    second = _min_distance_pair(
        [masks[i] & ~d1 for i in group], n, group
    )
    c, dd = second
    d2 = masks[c] ^ masks[dd]
    if d1 & d2:
        raise AssertionError("bucketed pair leaked into the first difference")

    cover = d1 | d2
    seen: dict[int, int] = {}
    for i in range(m):
        if i in (a, b, c, dd):
            continue
        k = masks[i] & cover
        if k in seen:
            e, f = seen[k], i
            d3 = masks[e] ^ masks[f]
            if d3 & cover:
                raise AssertionError("third pair difference not disjoint")
            return DisjointPairsWitness(((a, b), (c, dd), (e, f)))
        seen[k] = i
    return None


def _three_disjoint_exhaustive(family: Family) -> Optional[DisjointPairsWitness]:
    """Depth-3 backtracking over member pairs; complete but small-scale only."""
    masks = family.masks
    m = len(masks)
    if m < 6:
        return None
    pairs = [(i, j, masks[i] ^ masks[j]) for i, j in combinations(range(m), 2)]

    for t1 in range(len(pairs)):
        i1, j1, x1 = pairs[t1]
        used1 = {i1, j1}
        for t2 in range(t1 + 1, len(pairs)):
            i2, j2, x2 = pairs[t2]
            if x2 & x1 or i2 in used1 or j2 in used1:
                continue
            used2 = used1 | {i2, j2}
            cover = x1 | x2
            for t3 in range(t2 + 1, len(pairs)):
                i3, j3, x3 = pairs[t3]
                if x3 & cover or i3 in used2 or j3 in used2:
                    continue
                return DisjointPairsWitness(((i1, j1), (i2, j2), (i3, j3)))
    return None


# ---------------------------------------------------------------------------
# Focal families inside linear codes
# ---------------------------------------------------------------------------


def gf2_rank(masks: Sequence[int]) -> int:
    """Rank over GF(2) by Gaussian elimination on int rows."""
    rows = [m for m in masks if m]
    rank = 0
    while rows:
        pivot = max(rows)
        lead = 1 << (pivot.bit_length() - 1)
        rank += 1
        rows = [r ^ pivot if r & lead else r for r in rows]
        rows = [r for r in rows if r]
    return rank


def span_family(basis: Sequence[BitVector]) -> Family:
    """All xor combinations of the basis, in subset-counter order."""
    if not basis:
        raise ValueError("empty basis")
    n = basis[0].n
    bmasks = [v.mask for v in basis]
    if any(v.n != n for v in basis):
        raise ValueError("basis vectors of mixed length")
    if gf2_rank(bmasks) != len(bmasks):
        raise ValueError("basis vectors are dependent over GF(2)")
    words = [0]
    for bm in bmasks:
        words += [w ^ bm for w in words]
    return Family.from_masks(n, words)


def focal_from_linear(basis: Sequence[BitVector]) -> tuple[Family, FocalWitness]:
    """Focal 4-family in the span of an independent basis.

    The span is closed under xor, so three pairwise disjoint symmetric
    differences are themselves codewords; together with the zero vector as
    focus they form a focal family of size 4.  Returns the spanned family and
    the witness into it.
    """
    fam = span_family(basis)
    found = find_three_disjoint_symdiffs(fam)
    if found is None:
        raise WitnessNotFoundError(
            "no three pairwise disjoint symmetric differences in the span"
        )
    masks = fam.masks
    petals = tuple(
        fam.index_of_mask(masks[i] ^ masks[j]) for i, j in found.pairs
    )
    witness = FocalWitness(fam.index_of_mask(0), petals)
    if not is_focal(fam, witness.focus, witness.petals):
        raise AssertionError("linear-code witness failed focal re-check")
    return fam, witness


# ---------------------------------------------------------------------------
# Pairwise-intersecting symmetric differences and the k-uniform size check
# ---------------------------------------------------------------------------


def check_pairwise_symdiff_condition(family: Family) -> bool:
    """True iff every two member pairs on four distinct members have
    intersecting symmetric differences."""
    masks = family.masks
    m = len(masks)
    if m < 4:
        return True
    pairs = [(i, j, masks[i] ^ masks[j]) for i, j in combinations(range(m), 2)]
    for t1 in range(len(pairs)):
        i1, j1, x1 = pairs[t1]
        for t2 in range(t1 + 1, len(pairs)):
            i2, j2, x2 = pairs[t2]
            if i2 in (i1, j1) or j2 in (i1, j1):
                continue
            if x1 & x2 == 0:
                return False
    return True


@dataclass(frozen=True)
class UniformSizeReport:
    t: int
    rhs: int
    holds: bool


def kuniform_size_check(family: Family) -> UniformSizeReport:
    """Size inequality for k-uniform families whose member-pair differences
    pairwise intersect: |F| - 2 <= sum_{j<=t+1} C(2(k-t), j) with t the
    maximum pairwise intersection size.

    A violation would signal an implementation bug, not a family property.
    """
    masks = family.masks
    m = len(masks)
    weights = {v.bit_count() for v in masks}
    if len(weights) > 1:
        raise ValueError(f"family is not uniform: member sizes {sorted(weights)}")
    if not check_pairwise_symdiff_condition(family):
        raise ValueError("family violates the pairwise symmetric-difference condition")
    k = weights.pop() if weights else 0
    t = 0
    if m >= 2:
        t = max((a & b).bit_count() for a, b in combinations(masks, 2))
    rhs = sum(comb(2 * (k - t), j) for j in range(t + 2))
    return UniformSizeReport(t=t, rhs=rhs, holds=(m - 2 <= rhs))
