"""Exact extremal sizes for tiny cubes, plus brute-force tuple counters.

exact_extremal runs a depth-first include/exclude search over the 2^n cube
vectors in lexicographic order (include branch first) with incremental
violation checks, best-so-far pruning, and the focal upper bound as a global
cutoff.  For the translation-invariant kinds (near-sunflower and focal) the
all-zero vector is pinned into the family: xor-translating any family by one
of its members preserves the predicate and moves that member to zero, so the
restricted maximum equals the global one.

These routines are deliberately simple; they serve as the independent oracle
for everything else at n <= 5.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Optional

from .bitfam import Family
from .bounds import focal_upper
from .detect import CapExceededError

KINDS = ("ns", "ff", "bff0", "bff1")
MAX_SEARCH_N = 5


@dataclass(frozen=True)
class SearchResult:
    value: int
    witness: Family
    nodes_explored: int
    kind: str
    n: int
    r: int


# ---------------------------------------------------------------------------
# Mask-level tuple predicates (no Family wrapper, used in the hot loop)
# ---------------------------------------------------------------------------


def _masks_near_sunflower(masks, full) -> bool:
    once = twice = conce = ctwice = 0
    for m in masks:
        twice |= once & m
        once |= m
        w = m ^ full
        ctwice |= conce & w
        conce |= w
    return twice & ctwice == 0


def _masks_focal_any(masks) -> bool:
    for f in masks:
        union = 0
        for m in masks:
            if m == f:
                continue
            d = m ^ f
            if d & union:
                break
            union |= d
        else:
            return True
    return False


def _masks_bfocal_any(masks, full, b) -> bool:
    for f in masks:
        side = f if b == 1 else f ^ full
        union = 0
        for m in masks:
            if m == f:
                continue
            d = (m ^ f) & side
            if d & union:
                break
            union |= d
        else:
            return True
    return False


def _violates(masks, full, kind) -> bool:
    if kind == "ns":
        return _masks_near_sunflower(masks, full)
    if kind == "ff":
        return _masks_focal_any(masks)
    return _masks_bfocal_any(masks, full, int(kind[-1]))


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"kind {kind!r} not in {KINDS}")


# ---------------------------------------------------------------------------
# Exact extremal search
# ---------------------------------------------------------------------------


def exact_extremal(n: int, r: int, kind: str) -> SearchResult:
    """Largest subfamily of {0,1}^n with no violating r-tuple, exactly.

    The witness is one maximum family; optimality is certified by exhausting
    the pruned tree, maximality by the witness itself.
    """
    _check_kind(kind)
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    if not 0 <= n <= MAX_SEARCH_N:
        raise CapExceededError(f"search supports n <= {MAX_SEARCH_N}, got n={n}")
    full = (1 << n) - 1
    universe = list(range(1 << n))
    cutoff = min(len(universe), focal_upper(n, r))
    pin_zero = kind in ("ns", "ff")  # xor-translation invariant kinds

    best_val = 0
    best_fam: list[int] = []
    nodes = 0
    chosen: list[int] = []

    def creates_violation(v: int) -> bool:
        if len(chosen) < r - 1:
            return False
        for t in combinations(chosen, r - 1):
            if _violates((*t, v), full, kind):
                return True
        return False

    def dfs(i: int) -> bool:
        """Returns True once the global cutoff is provably reached."""
        nonlocal best_val, best_fam, nodes
        nodes += 1
        if len(chosen) > best_val:
            best_val = len(chosen)
            best_fam = list(chosen)
            if best_val >= cutoff:
                return True
        if i == len(universe) or len(chosen) + len(universe) - i <= best_val:
            return False
        v = universe[i]
        if not creates_violation(v):
            chosen.append(v)
            if dfs(i + 1):
                return True
            chosen.pop()
        return dfs(i + 1)

    if pin_zero:
        chosen.append(0)
        dfs(1)
    else:
        dfs(0)
    return SearchResult(
        value=best_val,
        witness=Family.from_masks(n, best_fam),
        nodes_explored=nodes,
        kind=kind,
        n=n,
        r=r,
    )


def family_is_free(family: Family, r: int, kind: str) -> bool:
    """Exhaustively confirm that no r-tuple of the family violates the kind."""
    _check_kind(kind)
    masks = family.masks
    full = (1 << family.n) - 1
    if len(masks) < r:
        return True
    return not any(_violates(t, full, kind) for t in combinations(masks, r))


# ---------------------------------------------------------------------------
# Brute-force tuple counters
# ---------------------------------------------------------------------------

BRUTE_TUPLE_CAP = 100_000


def brute_force_count(n: int, r: int, kind: str) -> int:
    """Exact number of violating r-tuples in the full cube {0,1}^n.

    Near-sunflowers are counted as unordered member sets; focal families as
    (focus, unordered petal set) pairs.
    """
    if kind not in ("ns", "ff"):
        raise ValueError(f"kind {kind!r} not in ('ns', 'ff')")
    if r < 3:
        raise ValueError(f"family size r={r} must be >= 3")
    if comb(1 << n, r) > BRUTE_TUPLE_CAP:
        raise CapExceededError(
            f"C(2^{n}, {r}) = {comb(1 << n, r)} tuples exceed {BRUTE_TUPLE_CAP}"
        )
    full = (1 << n) - 1
    count = 0
    for t in combinations(range(1 << n), r):
        if kind == "ns":
            count += _masks_near_sunflower(t, full)
        else:
            for f in t:
                union = 0
                for m in t:
                    if m == f:
                        continue
                    d = m ^ f
                    if d & union:
                        break
                    union |= d
                else:
                    count += 1
    return count


# ---------------------------------------------------------------------------
# Own-subset fractions
# ---------------------------------------------------------------------------


def own_subset_fraction(family: Family, member: int, s: int) -> Fraction:
    """Fraction of s-subsets of the member contained in no other member.

    The family must be uniform; the result is exact.
    """
    masks = family.masks
    if not 0 <= member < len(masks):
        raise IndexError(f"member index {member} outside [0, {len(masks)})")
    weights = {m.bit_count() for m in masks}
    if len(weights) > 1:
        raise ValueError(f"family is not uniform: member sizes {sorted(weights)}")
    a = masks[member]
    k = a.bit_count()
    if not 0 <= s <= k:
        raise ValueError(f"subset size s={s} outside [0, {k}]")
    bits = [1 << i for i in range(a.bit_length()) if (a >> i) & 1]
    others = [m for i, m in enumerate(masks) if i != member]
    own = 0
    for sub_bits in combinations(bits, s):
        sub = 0
        for b in sub_bits:
            sub |= b
        if all(sub & m != sub for m in others):
            own += 1
    return Fraction(own, comb(k, s))


# ---------------------------------------------------------------------------
# JSON result cache (used by the CLI; keyed by n, r, kind)
# ---------------------------------------------------------------------------


def default_cache_dir() -> Path:
    env = os.environ.get("SUNFORGE_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "sunforge"


def exact_extremal_cached(
    n: int, r: int, kind: str, cache_dir: Optional[Path] = None
) -> SearchResult:
    """exact_extremal with a JSON table cache keyed by (n, r, kind)."""
    cache_dir = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    cache_file = cache_dir / "exact_extremal.json"
    key = f"n={n},r={r},kind={kind}"
    table = {}
    if cache_file.exists():
        try:
            table = json.loads(cache_file.read_text())
        except (OSError, json.JSONDecodeError):
            table = {}
    if key in table:
        rec = table[key]
        return SearchResult(
            value=rec["value"],
            witness=Family.from_strings(rec["witness"])
            if rec["witness"]
            else Family(n),
            nodes_explored=rec["nodes_explored"],
            kind=kind,
            n=n,
            r=r,
        )
    result = exact_extremal(n, r, kind)
    table[key] = {
        "value": result.value,
        "witness": [str(v) for v in result.witness],
        "nodes_explored": result.nodes_explored,
    }
    cache_dir.mkdir(parents=True, exist_ok=True)
    cache_file.write_text(json.dumps(table, indent=1, sort_keys=True))
    return result
