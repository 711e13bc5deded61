"""Orbifold Gromov-Witten side: building blocks, prepotentials and genus one.

All blocks are quasi-modular q-series at the cusp at infinity.  The cubic
case is the orbifold P^1_{3,3,3} (level 3); the pillowcase is P^1_{2,2,2,2}
(level 2, built from the squared level-2 generators).
"""
from .fjrw import cubic_template
from .polynomial import Poly
from .qforms import generators
from .series import FracSeries, PowerSeries

PILLOW_T_COORDS = tuple(f"t{i}" for i in range(6))
GW_CUBIC_COORDS = tuple(f"t{i}" for i in range(8))


def gw_building_blocks(case, order, e3_denominator=4):
    """Named q-series with their weights: {name: (series, weight)}."""
    if case == "cubic":
        g = generators(3, order, e3_denominator)
        a, c, e = (FracSeries.lift(g[k].series) for k in "ACE")
        return {
            "M1": (c / 3, 1),
            "M2": (a / 3, 1),
            "M3": (-e / 9, 2),
        }
    if case == "pillowcase":
        g = generators(2, order)
        a, c, e = (FracSeries.lift(g[k].series) for k in "ACE")
        return {
            "X": (c / 8, 2),
            "Y": (-(e * 3 + a) / 16, 2),
            "Z": ((a - e) / 16, 2),
        }
    raise ValueError(f"unknown case {case!r}")


def gw_prepotential(case, order, e3_denominator=4):
    """Genus-zero potential with q-series coefficients."""
    blocks = gw_building_blocks(case, order, e3_denominator)
    one = FracSeries.lift(PowerSeries.constant(1, order, "q"))
    if case == "cubic":
        m1, m2, m3 = (blocks[k][0] for k in ("M1", "M2", "M3"))
        return cubic_template(m1 * 3, m2 * 3, m3 * 3, one, GW_CUBIC_COORDS)
    x, y, z = (blocks[k][0] for k in "XYZ")
    t = [Poly.var(PILLOW_T_COORDS, c) for c in PILLOW_T_COORDS]
    tw = t[1:5]
    quartic = sum((ti**4 for ti in tw[1:]), tw[0] ** 4)
    mixed = Poly(PILLOW_T_COORDS)
    for i in range(4):
        for j in range(i + 1, 4):
            mixed = mixed + tw[i] * tw[i] * tw[j] * tw[j]
    squares = sum((ti * ti for ti in tw[1:]), tw[0] * tw[0])
    pieces = [
        (t[0] * t[0] * t[5] / 2, one),
        (t[0] * squares / 4, one),
        (t[1] * t[2] * t[3] * t[4], x),
        (quartic / 24, y),
        (mixed / 4, z),
    ]
    total = Poly(PILLOW_T_COORDS)
    for shape, coeff in pieces:
        total = total + shape.map_coefficients(lambda c, coeff=coeff: coeff * c)
    return total


def gw_genus_one(case, order, e3_denominator=4):
    """Genus-one one-point function (A3^2 - 2 E3)/12 of the cubic."""
    if case != "cubic":
        raise ValueError("no closed genus-one formula is available for the pillowcase")
    g = generators(3, order, e3_denominator)
    a, e = FracSeries.lift(g["A"].series), FracSeries.lift(g["E"].series)
    return (a * a - e * 2) / 12


def twisted_degree(exps):
    """Number of twisted-sector coordinates in a monomial (all but the first and last)."""
    return sum(exps[1:-1])

