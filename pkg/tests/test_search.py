"""Exact search oracle tests: frozen values, independent certificates,
relations between kinds, tuple counters, own-subset fractions."""

import json
from fractions import Fraction
from itertools import combinations

import pytest

from sunforge.bitfam import Family
from sunforge.bounds import count_bound, focal_upper, lower_rate
from sunforge.detect import CapExceededError
from sunforge.search import (
    KINDS,
    brute_force_count,
    exact_extremal,
    exact_extremal_cached,
    family_is_free,
    own_subset_fraction,
)

# Values confirmed by enumerating every subset of the cube (n <= 3).
FULL_ENUM_VALUES = {
    ("ns", 3): [1, 2, 2, 2],
    ("ff", 3): [1, 2, 2, 4],
    ("bff0", 3): [1, 2, 2, 3],
    ("bff1", 3): [1, 2, 2, 3],
    ("ns", 4): [1, 2, 4, 6],
    ("ff", 4): [1, 2, 4, 6],
    ("bff0", 4): [1, 2, 3, 4],
    ("bff1", 4): [1, 2, 3, 4],
}

# Tuple counts over the full cube from direct enumeration.
CUBE_TUPLE_COUNTS = {
    ("ns", 1, 3): 0,
    ("ns", 2, 3): 4,
    ("ns", 3, 3): 56,
    ("ns", 4, 3): 560,
    ("ns", 1, 4): 0,
    ("ns", 2, 4): 0,
    ("ns", 3, 4): 8,
    ("ff", 1, 3): 0,
    ("ff", 2, 3): 4,
    ("ff", 3, 3): 48,
    ("ff", 4, 3): 400,
    ("ff", 1, 4): 0,
    ("ff", 2, 4): 0,
    ("ff", 3, 4): 8,
}


def subset_enumeration_oracle(n, r, kind):
    """Maximum violation-free size by enumerating all 2^(2^n) subsets."""
    universe = list(range(1 << n))
    best = 0
    for sel in range(1 << len(universe)):
        masks = [universe[i] for i in range(len(universe)) if (sel >> i) & 1]
        if len(masks) <= best:
            continue
        if family_is_free(Family.from_masks(n, masks), r, kind):
            best = len(masks)
    return best


# ---------------------------------------------------------------------------
# Exact extremal values
# ---------------------------------------------------------------------------


def test_named_cells():
    assert exact_extremal(1, 3, "ff").value == 2
    assert exact_extremal(2, 3, "ff").value == 2
    assert exact_extremal(2, 4, "ns").value == 4


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("r", [3, 4])
def test_values_match_full_subset_enumeration(kind, r):
    for n in range(3):
        assert exact_extremal(n, r, kind).value == subset_enumeration_oracle(n, r, kind)
    assert [exact_extremal(n, r, kind).value for n in range(4)] == FULL_ENUM_VALUES[
        (kind, r)
    ]


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("r", [3, 4])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_witness_is_free_and_maximal(kind, r, n):
    res = exact_extremal(n, r, kind)
    assert res.value == len(res.witness)
    assert family_is_free(res.witness, r, kind)
    # appending any excluded vector creates a violation
    have = set(res.witness.masks)
    for v in range(1 << n):
        if v in have:
            continue
        bigger = Family.from_masks(n, list(res.witness.masks) + [v])
        assert not family_is_free(bigger, r, kind)


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("r", [3, 4])
def test_no_larger_family_exists_n4(kind, r):
    """Independent optimality certificate: every (value+1)-subset violates."""
    n = 4
    value = exact_extremal(n, r, kind).value
    if value >= 1 << n:
        return
    for masks in combinations(range(1 << n), value + 1):
        assert not family_is_free(Family.from_masks(n, masks), r, kind)


def test_relations_between_kinds():
    for r in (3, 4):
        for n in range(5):
            g = {kind: exact_extremal(n, r, kind).value for kind in KINDS}
            assert g["ns"] <= g["ff"] <= focal_upper(n, r)
            assert g["bff0"] == g["bff1"] <= g["ff"]
            assert int(lower_rate(r, "ff") ** n) <= g["ff"]
            assert int(lower_rate(r, "ns") ** n) <= g["ns"]


def test_monotone_in_n():
    for kind in KINDS:
        for r in (3, 4):
            vals = [exact_extremal(n, r, kind).value for n in range(5)]
            assert all(a <= b for a, b in zip(vals, vals[1:]))


def test_search_caps_and_validation():
    with pytest.raises(CapExceededError):
        exact_extremal(6, 3, "ff")
    with pytest.raises(ValueError):
        exact_extremal(3, 3, "nope")
    with pytest.raises(ValueError):
        exact_extremal(3, 2, "ns")


# ---------------------------------------------------------------------------
# Brute-force tuple counts
# ---------------------------------------------------------------------------


def matrix_counter_oracle(n, r, kind):
    """Distinct-row column-condition matrices divided by row multiplicity."""
    from itertools import product
    from math import factorial

    count = 0
    for rows in product(range(1 << n), repeat=r):
        if len(set(rows)) != r:
            continue
        ok = True
        for c in range(n):
            col = [(row >> c) & 1 for row in rows]
            w = sum(col)
            if kind == "ns":
                ok = w in (0, 1, r - 1, r)
            else:
                ok = sum(b != col[0] for b in col[1:]) <= 1
            if not ok:
                break
        count += ok
    div = factorial(r) if kind == "ns" else factorial(r - 1)
    assert count % div == 0
    return count // div


@pytest.mark.parametrize("kind,n,r", sorted(CUBE_TUPLE_COUNTS))
def test_brute_force_count_frozen_values(kind, n, r):
    assert brute_force_count(n, r, kind) == CUBE_TUPLE_COUNTS[(kind, n, r)]


@pytest.mark.parametrize("kind", ["ns", "ff"])
@pytest.mark.parametrize("n,r", [(1, 3), (2, 3), (3, 3), (2, 4), (3, 4)])
def test_brute_force_count_matches_matrix_counter(kind, n, r):
    assert brute_force_count(n, r, kind) == matrix_counter_oracle(n, r, kind)


@pytest.mark.parametrize("kind", ["ns", "ff"])
def test_brute_force_count_below_bound(kind):
    for n, r in [(1, 3), (2, 3), (3, 3), (4, 3), (1, 4), (2, 4), (3, 4)]:
        assert brute_force_count(n, r, kind) <= count_bound(n, r, kind)


def test_brute_force_count_cap():
    with pytest.raises(CapExceededError):
        brute_force_count(6, 4, "ns")


# ---------------------------------------------------------------------------
# Own-subset fractions
# ---------------------------------------------------------------------------


def test_own_subset_disjoint_sets():
    fam = Family.from_masks(9, [0b111, 0b111000, 0b111000000])
    for member in range(3):
        for s in (1, 2, 3):
            assert own_subset_fraction(fam, member, s) == 1


def test_own_subset_shared_pair():
    # {1,2,3} and {1,2,4}: own 2-subsets of the first are {1,3} and {2,3}
    fam = Family.from_masks(4, [0b0111, 0b1011])
    assert own_subset_fraction(fam, 0, 2) == Fraction(2, 3)


def test_own_subset_validation():
    fam = Family.from_strings(["110", "111"])
    with pytest.raises(ValueError):
        own_subset_fraction(fam, 0, 1)
    fam2 = Family.from_strings(["110", "011"])
    with pytest.raises(ValueError):
        own_subset_fraction(fam2, 0, 3)
    with pytest.raises(IndexError):
        own_subset_fraction(fam2, 5, 1)


def weight_slice(family, k):
    masks = [m for m in family.masks if m.bit_count() == k]
    return Family.from_masks(family.n, masks)


@pytest.mark.parametrize("r", [3, 4])
def test_own_subset_fraction_on_one_sided_free_slices(r):
    """Every uniform slice of a one-sided-focal-free family keeps the
    1/(r-1) own-subset guarantee at s = ceil((r-2)k/(r-1))."""
    for n in (3, 4):
        witness = exact_extremal(n, r, "bff1").witness
        for k in range(0, n + 1):
            sl = weight_slice(witness, k)
            if len(sl) == 0:
                continue
            s = -((r - 2) * k // -(r - 1))
            for member in range(len(sl)):
                assert own_subset_fraction(sl, member, s) >= Fraction(1, r - 1)


# ---------------------------------------------------------------------------
# Cache
# ---------------------------------------------------------------------------


def test_cached_search_round_trip(tmp_path):
    res1 = exact_extremal_cached(3, 4, "ns", cache_dir=tmp_path)
    cache_file = tmp_path / "exact_extremal.json"
    assert cache_file.exists()
    res2 = exact_extremal_cached(3, 4, "ns", cache_dir=tmp_path)
    assert res1.value == res2.value == 6
    assert res1.witness == res2.witness
    table = json.loads(cache_file.read_text())
    assert "n=3,r=4,kind=ns" in table


def test_cached_search_survives_corrupt_cache(tmp_path):
    cache_file = tmp_path / "exact_extremal.json"
    cache_file.write_text("{nonsense")
    res = exact_extremal_cached(2, 3, "ff", cache_dir=tmp_path)
    assert res.value == 2
    assert json.loads(cache_file.read_text())
