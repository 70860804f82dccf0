"""Bound calculator tests with frozen high-precision oracle values."""

from fractions import Fraction
from math import log2

import pytest

from sunforge.bounds import (
    binary_entropy,
    count_bound,
    focal_upper,
    kuniform_rate,
    kuniform_size_bound,
    lower_rate,
    mrrw_rate,
    one_sided_asymptotic_base,
    one_sided_total_upper,
    one_sided_uniform_upper,
    qary_bounds,
    report_grid,
)

# 50-digit mpmath reference values, frozen
X_STAR_REF = 0.31767219617198067263
KUNIFORM_BASE_REF = 2.14789903570478735403
MRRW_213_REF = 0.43837736936723211192
MRRW_287_REF = 0.27627914322762193745
H_03177_REF = 0.90186273439733262226


def test_focal_upper_values():
    assert focal_upper(0, 4) == 3
    assert focal_upper(6, 3) == 16
    assert focal_upper(9, 4) == 3 * 2**6
    # per-coordinate growth for r=4 is 2^(2/3)
    big = focal_upper(300, 4)
    assert (big / 3) == 2 ** (2 * 300 // 3)
    with pytest.raises(ValueError):
        focal_upper(3, 2)


def test_lower_rate_values():
    assert lower_rate(4, "ns") == pytest.approx((8 / 5) ** (1 / 3), rel=1e-12)
    assert lower_rate(4, "ns") == pytest.approx(2 / 5 ** (1 / 3), rel=1e-12)
    assert lower_rate(4, "ff") == pytest.approx(2 ** (1 / 3), rel=1e-12)
    with pytest.raises(ValueError):
        lower_rate(4, "xx")


def test_qary_bounds_values():
    low, up = qary_bounds(4, 3, 5)
    assert up == 2 * 25 == 50
    low43, _ = qary_bounds(0, 3, 4)
    assert low43 == pytest.approx(4 / 7**0.5, rel=1e-12)


def test_qary_reduces_to_binary_at_q2():
    for r in (3, 4, 5):
        for n in (0, 3, 7, 10):
            low, up = qary_bounds(n, r, 2)
            assert low == lower_rate(r, "ff")
            assert up == focal_upper(n, r)


def test_rs_achieves_upper_up_to_factor():
    # at (q=5, n=4, r=3) the upper bound is exactly (r-1) times the code size
    _, up = qary_bounds(4, 3, 5)
    assert up == (3 - 1) * 5**2


def test_binary_entropy_values():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.3177) == pytest.approx(H_03177_REF, abs=1e-12)
    with pytest.raises(ValueError):
        binary_entropy(-0.1)
    with pytest.raises(ValueError):
        binary_entropy(1.1)


def test_mrrw_rate_thresholds():
    assert mrrw_rate(0.213) == pytest.approx(MRRW_213_REF, abs=1e-12)
    assert mrrw_rate(0.213) < 0.44
    assert mrrw_rate(0.287) == pytest.approx(MRRW_287_REF, abs=1e-12)
    assert mrrw_rate(0.287) < 0.28
    assert mrrw_rate(0.0) == 1.0
    with pytest.raises(ValueError):
        mrrw_rate(0.6)


def test_mrrw_rate_strictly_decreasing():
    xs = [i / 1000 for i in range(0, 501)]
    vals = [mrrw_rate(x) for x in xs]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_one_sided_uniform_values():
    assert one_sided_uniform_upper(5, 0, 4) == 3
    assert one_sided_uniform_upper(6, 3, 3) == 10
    assert isinstance(one_sided_uniform_upper(9, 4, 3), Fraction)


def test_one_sided_uniform_monotone_in_n():
    for r in (3, 4):
        for k in (2, 3, 5):
            vals = [one_sided_uniform_upper(n, k, r) for n in range(k, k + 8)]
            assert all(a <= b for a, b in zip(vals, vals[1:]))


def test_one_sided_base_values():
    assert one_sided_asymptotic_base(3) == 1.25
    base4 = one_sided_asymptotic_base(4)
    assert 0.469 < log2(base4) < 0.470


def test_one_sided_sum_converges_to_base():
    # measured gaps: r=3 gives 0.0266 at n=200 and 0.0143 at n=400;
    # r=4 gives 0.0317 and 0.0170; polynomial slack decays like log n / n
    for r, lim200, lim400 in [(3, 0.035, 0.020), (4, 0.040, 0.022)]:
        s200, base = one_sided_total_upper(200, r)
        s400, _ = one_sided_total_upper(400, r)
        gap200 = float(s200) ** (1 / 200) - base
        gap400 = float(s400) ** (1 / 400) - base
        assert 0 < gap400 < gap200
        assert gap200 < lim200 and gap400 < lim400


def test_kuniform_rate_constants():
    x_star, base = kuniform_rate()
    assert abs(x_star - (1 - x_star) ** 3) < 1e-12
    assert x_star == pytest.approx(X_STAR_REF, abs=1e-11)
    assert base == pytest.approx(KUNIFORM_BASE_REF, abs=1e-9)
    assert 2.14 < base < 2.148


def test_kuniform_rate_is_global_max():
    from sunforge.bounds import binary_entropy as h

    _, base = kuniform_rate()
    for i in range(1, 5000):
        x = i / 10000.0
        assert 2 ** (2 * h(x) / (1 + 2 * x)) <= base + 1e-9


def test_kuniform_rate_beats_naive_bound():
    _, base = kuniform_rate()
    for k in range(1, 31):
        assert 2 ** (2 * k) > base**k


def test_kuniform_size_bound_values():
    assert kuniform_size_bound(5, 5) == 1
    assert kuniform_size_bound(2, 1) == 4
    for k in range(1, 12):
        for t in range((k + 1) // 2, k + 1):
            assert kuniform_size_bound(k, t) <= 2**k
    with pytest.raises(ValueError):
        kuniform_size_bound(3, 4)


def test_count_bound_values():
    assert count_bound(2, 4, "ns") == Fraction(100, 24)
    assert count_bound(0, 3, "ns") == Fraction(1, 6)
    assert count_bound(0, 4, "ff") == Fraction(1, 6)
    assert count_bound(3, 3, "ff") == Fraction(216, 2)


def test_report_grid_contents():
    rows = report_grid(ns=(6,), rs=(4,), qs=(5,), ks=(3,))
    names = {r.name: r for r in rows}
    assert names["upper-rate r=4"].value == pytest.approx(2 ** (2 / 3))
    assert names["lower-rate ns r=4"].value == pytest.approx((8 / 5) ** (1 / 3))
    assert names["lower-rate ff r=4"].value == pytest.approx(2 ** (1 / 3))
    assert names["upper n=6 r=4"].value == focal_upper(6, 4)
    assert names["kuniform-diff-rate"].value < 2.148
    for row in rows:
        assert row.formula
        if row.rate is not None and row.name.startswith("lower-rate"):
            assert row.rate == row.value


def test_report_grid_empty():
    assert report_grid() == []
