from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mirrorcayley.cayley import (
    NotQuasiModular,
    alternative_e,
    cayley_expansions,
    decompose,
    holomorphic_limit,
    is_graded,
    rescale_form,
)
from mirrorcayley.cyclotomic import CycScalar
from mirrorcayley.qforms import generators
from mirrorcayley.series import FracSeries, PowerSeries

F = Fraction


def test_level3_values():
    e = cayley_expansions(3, 12)
    c, a, hol_e = e["C"].series, e["A"].series, e["E"].series
    assert [c[k] for k in (0, 3, 6, 9)] == [1, F(1, 162), F(1, 131220), F(1, 111602610)]
    assert a[1] == F(1, 3) and a[7] == F(1, 306180)
    assert hol_e[5] == F(-1, 2430) and hol_e[11] == F(-13, 2728063800)


def test_level2_values():
    e = cayley_expansions(2, 8)
    assert e["A"].series[1] == F(1, 2) and e["A"].series[5] == F(1, 2560)
    assert e["C"].series[2] == F(1, 16) and e["C"].series[4] == F(1, 768)
    assert e["E"].series[3] == F(-1, 96) and e["E"].series[7] == F(-13, 2580480)


def test_b_generators_carry_phases():
    e3 = cayley_expansions(3, 9)["B"].series
    assert e3[0] == CycScalar.zeta(-4)
    e2 = cayley_expansions(2, 6)["B"].series
    assert e2[0] == -CycScalar.zeta(6)


def test_cubic_relation_at_elliptic_point():
    e = cayley_expansions(3, 15)
    a, b, c = (e[k].series for k in "ABC")
    assert (a**3 - b**3 - c**3).to_rational().is_zero()


@pytest.mark.parametrize("level", [3, 2])
def test_alternative_e_agrees(level):
    assert alternative_e(level, 20) == cayley_expansions(level, 20)["E"].series


@pytest.mark.parametrize("level,mod,res", [(3, 3, 0), (2, 2, 0)])
def test_gradings(level, mod, res):
    e = cayley_expansions(level, 24)
    assert is_graded(e["C"].series, mod, res)
    assert is_graded(e["A"].series, mod, 1)
    assert is_graded(e["E"].series, mod, (mod - 1) if level == 3 else 1)


def test_decompose_identifies_generators():
    g = generators(3, 16)
    assert decompose(g["E"].series, 2, 3) == {(0, 0, 1): 1}
    bad = generators(3, 16, e3_denominator=3)["E"].series
    assert decompose(bad, 2, 3) == {(0, 0, 1): F(4, 3)}
    assert decompose(FracSeries.lift(g["A"].series) ** 2, 2, 3) == {(2, 0, 0): 1}


def test_decompose_level2_quartic_relation():
    g = generators(2, 16)
    b4 = g["B"].series * g["B"].series
    assert decompose(b4, 4, 2) == {(2, 0, 0): 1, (0, 2, 0): -1}


def test_non_modular_series_rejected():
    junk = PowerSeries([1, 5, 7, 11, 2, 3, 1, 1, 1, 1, 1, 1, 1], 12, "q")
    with pytest.raises(NotQuasiModular):
        decompose(junk, 2, 3)
    with pytest.raises(NotQuasiModular):
        decompose(FracSeries(F(1, 5), PowerSeries([1] * 10, 9, "q")), 1, 3)


def test_holomorphic_limit_of_products():
    g = generators(3, 16)
    e = cayley_expansions(3, 12)
    prod = FracSeries.lift(g["A"].series) * g["C"].series
    assert holomorphic_limit(prod, 2, 3, 12) == e["A"].series * e["C"].series


def test_rescale_form():
    s = PowerSeries([1, 2, 3], 2, "v")
    out = rescale_form(s, 2, 4)
    assert out.coeffs == (F(1, 4), F(1, 8), F(3, 64))
    assert rescale_form(s, 1, 4).coeffs == (F(1, 2), F(1, 4), F(3, 32))
    with pytest.raises(ValueError):
        rescale_form(s, 1, 2)
    with pytest.raises(ValueError):
        rescale_form(s, F(1, 2), 4)


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 2), st.fractions(-3, 3, max_denominator=5))
def test_holomorphic_limit_is_multiplicative(i, j, k, coeff):
    # a monomial in A, C and E* maps to the same monomial in the elliptic expansions
    g = generators(3, 16)
    a, c = FracSeries.lift(g["A"].series), FracSeries.lift(g["C"].series)
    e_star = c.log_derivative() * 6 - a * a
    series = a**i * c**j * FracSeries.lift(e_star) ** k * coeff
    if coeff == 0:
        return
    weight = i + j + 2 * k
    e = cayley_expansions(3, 10)
    expected = e["A"].series ** i * e["C"].series ** j * e["E"].series ** k * coeff
    assert holomorphic_limit(series, weight, 3, 10) == expected
