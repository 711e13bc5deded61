"""Elliptic-point expansions of the generators and the holomorphic-limit map.

All series here are in v, the rescaled Cayley coordinate at the elliptic
point, so every coefficient is rational (or lies in Q(zeta_24) for the B
generator, whose value at the elliptic point carries a root of unity).

``holomorphic_limit`` sends an arbitrary quasi-modular q-series to its
v-expansion.  It writes the q-series as a polynomial in A, C and the
derivative generator E* = 2r theta(log C) - A^2, then substitutes the
elliptic expansions.  E* is built from C and A alone, so a q-series that
uses a mis-normalized E is detected rather than silently absorbed.
"""
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import CycScalar
from .hypergeom import level_data, orbifold_chart
from .linsolve import InconsistentSystem, solve
from .qforms import ELLIPTIC_POINT, FormDescriptor, generators
from .series import FracSeries, PowerSeries


class NotQuasiModular(ValueError):
    pass


# level -> (names of A, B, C, E at the elliptic point, weight of each generator)
_NAMES = {
    3: ("A3", "B3", "C3", "E3"),
    2: ("A2sq", "B2sq", "C2sq", "E2gen"),
}
_GEN_WEIGHT = {3: (1, 1, 2), 2: (2, 2, 2)}


def _elliptic(name, level, weight, series):
    return FormDescriptor("cayley:" + name, level, Fraction(weight), ELLIPTIC_POINT, series)


@lru_cache(maxsize=16)
def cayley_expansions(level, order):
    """v-expansions of A, B, C and the holomorphic limit of E, keyed A, B, C, E."""
    d = level_data(level)
    chart = orbifold_chart(level, order + 1)
    y = chart.y_of_v
    x = y**d.exponent
    f3 = chart.F3.compose(x)
    names = _NAMES[level]
    if level == 3:
        c = f3
        a = y * f3
        # B^3 = A^3 - C^3 = -(1 - psi^3) F3^3; the branch at the elliptic point is exp(-i pi/3)
        b = (1 - x).nth_root(3) * f3 * CycScalar.zeta(-4)
        e = c.log().derive() * 6 - (a * a).truncate(order)
        weights = (1, 1, 1, 2)
    else:
        c = f3 * f3
        a = y * c
        # (B2^2)^2 = -(1 - w^2) F3^4; B2^2 at the elliptic point is -i times C2^2
        b = (1 - x).nth_root(2) * c * (-CycScalar.zeta(6))
        e = c.log().derive() * 4 - a.truncate(order)
        weights = (2, 2, 2, 2)
    series = [s.truncate(order) for s in (a, b, c, e)]
    return {
        key: _elliptic(name, level, w, s)
        for key, name, w, s in zip("ABCE", names, weights, series)
    }


def alternative_e(level, order):
    """Holomorphic limit of E from -2r (x - 1) A^2 d/dx log C(x) - A^2, x = y^e."""
    d = level_data(level)
    chart = orbifold_chart(level, order + 1)
    y = chart.y_of_v
    x = y**d.exponent
    f3 = chart.F3
    exp = cayley_expansions(level, order + 1)
    if level == 3:
        a2 = exp["A"].series ** 2
        dlogc = f3.log().derive().compose(x) * 6
    else:
        # C2^2 = F3^2 and the level-2 prefactor is 2r = 8 on log C2
        a2 = exp["A"].series
        dlogc = f3.log().derive().compose(x) * 8
    return (-(x - 1) * a2 * dlogc - a2).truncate(order)


def rescale_form(series, weight, M):
    """M^(-k/2) * f(v / M): the effect of rescaling the Cayley coordinate by M."""
    M = Fraction(M)
    if M == 0:
        raise ValueError("rescaling factor must be nonzero")
    k = Fraction(weight)
    if k.denominator != 1:
        raise ValueError("weight must be an integer")
    prefactor = _sqrt_power(M, -int(k))
    return series.scale_argument(1 / M) * prefactor


def _sqrt_power(M, n):
    """M^(n/2) as a Fraction; fails when the result is irrational."""
    if n % 2 == 0:
        return M ** (n // 2)
    root = _rational_sqrt(M)
    if root is None:
        raise ValueError(f"M^({n}/2) is irrational for M = {M}")
    return root**n


def _rational_sqrt(x):
    from math import isqrt

    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


# -- holomorphic limit of q-series ---------------------------------------------

def _monomials(level, weight):
    wa, wc, we = _GEN_WEIGHT[level]
    weight = Fraction(weight)
    out = []
    for k in range(int(weight // we) + 1):
        rest = weight - we * k
        for i in range(int(rest // wa) + 1):
            left = rest - wa * i
            if left % wc == 0:
                out.append((i, int(left // wc), k))
    return out


def _cusp_basis(level, order):
    g = generators(level, order)
    a = FracSeries.lift(g["A"].series)
    c = FracSeries.lift(g["C"].series)
    if level == 3:
        e_star = c.log_derivative() * 6 - a * a
    else:
        # here a and c already are the squares A2^2 and C2^2
        e_star = c.log_derivative() * 4 - a
    return a, c, FracSeries.lift(e_star)


def decompose(series, weight, level):
    """Write a q-series as a polynomial in (A, C, E*) of the given weight.

    Returns {(i, j, k): coefficient} for A^i C^j E*^k.  Raises NotQuasiModular
    if no such polynomial matches every known coefficient.
    """
    series = FracSeries.lift(series)
    monos = _monomials(level, weight)
    if not monos:
        raise NotQuasiModular(f"no monomials of weight {weight} at level {level}")
    order = max(1, int(series.trunc // 1))
    a, c, e = _cusp_basis(level, order)
    columns = [a**i * c**j * e**k for i, j, k in monos]
    top = min([series.trunc] + [col.trunc for col in columns])
    step = Fraction(1, 3) if level == 3 else Fraction(1, 2)
    exponents = []
    t = Fraction(0)
    while t <= top:
        exponents.append(t)
        t += step
    extra = [ex for ex, _ in series.terms() if ex < 0 or (ex / step).denominator != 1]
    if extra:
        raise NotQuasiModular(f"exponent {extra[0]} is not on the level-{level} grid")
    matrix = [[col.coefficient(ex) for col in columns] for ex in exponents]
    rhs = [series.coefficient(ex) for ex in exponents]
    try:
        sol = solve(matrix, rhs)
    except InconsistentSystem:
        raise NotQuasiModular("series is not a quasi-modular form of the stated weight") from None
    except ValueError:
        raise NotQuasiModular("not enough coefficients to determine the decomposition") from None
    return {m: x for m, x in zip(monos, sol) if x != 0}


def holomorphic_limit(series, weight, level, order):
    """v-expansion to the given order of the quasi-modular q-series."""
    poly = decompose(series, weight, level)
    exp = cayley_expansions(level, order)
    a, c, e = exp["A"].series, exp["C"].series, exp["E"].series
    total = PowerSeries.constant(0, order, "v")
    for (i, j, k), coeff in poly.items():
        total = total + a**i * c**j * e**k * coeff
    return total


def is_graded(series, modulus, residue):
    """True when every nonzero coefficient sits at an exponent congruent to ``residue``."""
    return all(c == 0 or k % modulus == residue % modulus for k, c in enumerate(series.coeffs))

