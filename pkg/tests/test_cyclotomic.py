import cmath
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given

from mirrorcayley.cyclotomic import I, OMEGA, SQRT2, SQRT3, ZETA, CycScalar, exp_pi_i
from strategies import cyc_scalars


def test_zeta_has_order_24():
    assert ZETA**24 == 1
    assert ZETA**12 == -1
    assert all(ZETA**k != 1 for k in range(1, 24))


def test_named_constants():
    assert I * I == -1
    assert SQRT2 * SQRT2 == 2
    assert SQRT3 * SQRT3 == 3
    assert OMEGA**3 == 1 and OMEGA != 1
    assert 1 + OMEGA + OMEGA**2 == 0


def test_named_constants_numerically():
    assert abs(SQRT2.to_complex() - 2**0.5) < 1e-14
    assert abs(SQRT3.to_complex() - 3**0.5) < 1e-14
    assert abs(I.to_complex() - 1j) < 1e-14
    assert abs(OMEGA.to_complex() - cmath.exp(2j * cmath.pi / 3)) < 1e-14


@pytest.mark.parametrize("r", [Fraction(k, 12) for k in range(-24, 25)])
def test_exp_pi_i_matches_cmath(r):
    assert abs(exp_pi_i(r).to_complex() - cmath.exp(1j * cmath.pi * float(r))) < 1e-13


def test_exp_pi_i_rejects_other_angles():
    with pytest.raises(ValueError):
        exp_pi_i(Fraction(1, 5))


def test_negative_powers_and_zeta_indices():
    assert CycScalar.zeta(-1) * ZETA == 1
    assert ZETA**-3 == CycScalar.zeta(21)


def test_conjugate_and_rationality():
    assert I.conjugate() == -I
    assert (SQRT2 * SQRT2).is_rational()
    assert not SQRT3.is_rational()
    with pytest.raises(ValueError):
        SQRT3.to_rational()
    assert (SQRT3 * SQRT3).to_rational() == 3


def test_high_precision_value():
    with mpmath.workdps(40):
        assert abs(SQRT3.to_complex(mpmath) - mpmath.sqrt(3)) < mpmath.mpf(10) ** -38


def test_json_round_trip():
    x = SQRT2 / 3 + I * Fraction(5, 7)
    assert CycScalar.from_json(x.to_json()) == x


@given(cyc_scalars(), cyc_scalars(), cyc_scalars())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(cyc_scalars(nonzero=True))
def test_inverse(a):
    assert a * (1 / a) == 1
    assert (a / a) == 1


@given(cyc_scalars(), cyc_scalars())
def test_to_complex_is_a_homomorphism(a, b):
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9
    assert abs((a + b).to_complex() - a.to_complex() - b.to_complex()) < 1e-9
    assert abs(a.conjugate().to_complex() - a.to_complex().conjugate()) < 1e-9
