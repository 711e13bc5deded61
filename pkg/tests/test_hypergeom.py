from fractions import Fraction

import mpmath
import pytest

from mirrorcayley.hypergeom import (
    hg_series,
    normalized_coordinate,
    orbifold_chart,
    pochhammer,
    schwarzian,
    schwarzian_crosscheck,
    schwarzian_potential,
)
from mirrorcayley.series import PowerSeries

F = Fraction


def test_pochhammer():
    assert pochhammer(F(1, 3), 0) == 1
    assert pochhammer(F(1, 3), 3) == F(1, 3) * F(4, 3) * F(7, 3)
    assert pochhammer(1, 5) == 120


def test_hg_series_against_mpmath():
    s = hg_series(F(1, 3), F(1, 3), F(2, 3), 60)
    with mpmath.workdps(30):
        x = mpmath.mpf("0.1")
        assert abs(s.evaluate(x, mpmath) - mpmath.hyp2f1(mpmath.mpf(1) / 3, mpmath.mpf(1) / 3, mpmath.mpf(2) / 3, x)) < 1e-25


def test_hg_series_elementary_case():
    # 2F1(1, 1; 2; x) = -log(1 - x)/x
    s = hg_series(1, 1, 2, 10)
    assert all(s[n] == F(1, n + 1) for n in range(11))


def test_hg_series_rejects_pole():
    with pytest.raises(ValueError):
        hg_series(1, 1, -2, 5)


def test_level3_chart():
    v, psi = normalized_coordinate(3, 12)
    assert v[1] == 3 and v[4] == F(1, 2)
    assert psi[1] == F(1, 3) and psi[4] == F(-1, 486)
    assert v.compose(psi) == PowerSeries.gen(12, "v")


def test_level2_chart():
    v, w = normalized_coordinate(2, 10)
    assert v[1] == 2 and v[3] == F(1, 2)
    assert w[1] == F(1, 2)


def test_level3_potential_closed_form():
    q = schwarzian_potential(3, 20)
    psi = PowerSeries.gen(20, "psi")
    closed = psi * (8 + psi**3) / ((1 - psi**3) ** 2 * 2)
    assert q == closed


def test_schwarzian_of_mobius_is_zero():
    x = PowerSeries.gen(12, "x")
    f = x / (1 + x * 2)
    assert schwarzian(f).is_zero()


@pytest.mark.parametrize("level,const", [(3, F(1, 3)), (2, F(1, 2))])
def test_schwarzian_crosscheck(level, const):
    result = schwarzian_crosscheck(level, 25)
    assert all(r["first_mismatch"] is None for r in result["reports"])
    assert result["constant"] == const


def test_chart_numerically():
    chart = orbifold_chart(3, 40)
    with mpmath.workdps(30):
        p = mpmath.mpf("0.2")
        a = mpmath.mpf(1) / 3
        exact = 3 * p * mpmath.hyp2f1(1 - a, 1 - a, 2 - 2 * a, p**3) / mpmath.hyp2f1(a, a, 2 * a, p**3)
        assert abs(chart.v_of_y.evaluate(p, mpmath) - exact) < 1e-20
