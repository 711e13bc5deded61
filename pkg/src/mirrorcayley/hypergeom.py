"""Gauss hypergeometric series and the rational chart at the elliptic point.

At level 3 the chart coordinate is psi with x = psi^3; at level 2 it is
w = psi^2 with x = w^2.  In both cases

    v(y) = k * y * F4(y^e) / F3(y^e),   F3 = 2F1(a, a; 2a; x),
                                        F4 = 2F1(b, b; 1 + b - a; x),

with (a, k, e) = (1/3, 3, 3) or (1/4, 2, 2).  The constants k are certified
numerically in ``monodromy``.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .series import PowerSeries


def pochhammer(a, n):
    out = Fraction(1)
    for k in range(n):
        out *= a + k
    return out


def hg_series(a, b, c, order, variable="x"):
    """sum (a)_n (b)_n / ((c)_n n!) x^n."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if c <= 0 and c.denominator == 1:
        raise ValueError(f"c = {c} is a nonpositive integer")
    coeffs = [Fraction(1)]
    for n in range(order):
        coeffs.append(coeffs[-1] * (a + n) * (b + n) / ((c + n) * (n + 1)))
    return PowerSeries(coeffs, order, variable)


@dataclass(frozen=True)
class LevelData:
    level: int
    a: Fraction
    scale: int      # k in v = k y F4/F3
    exponent: int   # e in x = y^e
    chart_name: str

    @property
    def b(self):
        return 1 - self.a


LEVELS = {
    3: LevelData(3, Fraction(1, 3), 3, 3, "psi"),
    2: LevelData(2, Fraction(1, 4), 2, 2, "w"),
}


def level_data(level):
    try:
        return LEVELS[level]
    except KeyError:
        raise ValueError(f"unsupported level {level}; only 2 and 3 are implemented") from None


@dataclass(frozen=True)
class OrbifoldChart:
    level: int
    F3: PowerSeries
    F4: PowerSeries
    v_of_y: PowerSeries
    y_of_v: PowerSeries


def period_bodies(level, order):
    d = level_data(level)
    a, b = d.a, d.b
    return hg_series(a, a, 2 * a, order), hg_series(b, b, 1 + b - a, order)


@lru_cache(maxsize=16)
def orbifold_chart(level, order):
    d = level_data(level)
    xorder = order // d.exponent + 1
    F3, F4 = period_bodies(level, xorder)
    y = PowerSeries.gen(order, d.chart_name)
    x = y**d.exponent
    v = y * F4.compose(x) / F3.compose(x) * d.scale
    v = v.truncate(order)
    return OrbifoldChart(level, F3, F4, v, v.reverse().with_variable("v"))


def normalized_coordinate(level, order):
    """(v as a series in the chart coordinate, chart coordinate as a series in v)."""
    chart = orbifold_chart(level, order)
    return chart.v_of_y, chart.y_of_v


def schwarzian(f):
    """{f, x} = f'''/f' - 3/2 (f''/f')^2 for a series with f'(0) != 0."""
    d1 = f.derive()
    d2 = d1.derive()
    d3 = d2.derive()
    t = d3.trunc
    r1 = d2.truncate(t) / d1.truncate(t)
    return d3 / d1.truncate(t) - r1 * r1 * Fraction(3, 2)


def schwarzian_potential(level, order):
    """Q(y) = {v, y} predicted by the hypergeometric equation.

    For x = y^e and exponent differences 1 - c = 1/e, c - a - b = 0, a - b = 0
    this is e^2 y^(2e-2) / (2 (1 - y^e)^2) + (1 - 1/e^2) e^2 y^(e-2) / (2 (1 - y^e)).
    At level 3 it equals psi (8 + psi^3) / (2 (1 - psi^3)^2).
    """
    d = level_data(level)
    e = d.exponent
    y = PowerSeries.gen(order, d.chart_name)
    one_minus = 1 - y**e
    first = y ** (2 * e - 2) * Fraction(e * e, 2) / (one_minus * one_minus)
    second = y ** (e - 2) * Fraction(e * e - 1, 2) / one_minus
    return first + second


def schwarzian_crosscheck(level, order):
    """Compare the reverted chart with the Schwarzian ODE and the first-order ODE for dy/dv.

    Returns a dict with match reports and the derived constant c in
    dy/dv = c (1 - y^e) F3(y^e)^2.
    """
    from .reports import match_report

    d = level_data(level)
    chart = orbifold_chart(level, order + 3)
    v, y = chart.v_of_y, chart.y_of_v
    reports = []

    lhs = schwarzian(v)
    q = schwarzian_potential(level, lhs.trunc)
    reports.append(match_report("{v, y} = Q(y)", lhs, q))

    # {y, v} = -(dy/dv)^2 Q(y(v))
    s_yv = schwarzian(y)
    dy = y.derive().truncate(s_yv.trunc)
    qv = schwarzian_potential(level, s_yv.trunc).compose(y.truncate(s_yv.trunc))
    reports.append(match_report("{y, v} = -(dy/dv)^2 Q(y)", s_yv, -(dy * dy) * qv))

    dy = y.derive()
    x = y.truncate(dy.trunc) ** d.exponent
    shape = (1 - x) * chart.F3.compose(x) ** 2
    const = dy[0] / shape[0]
    reports.append(match_report("dy/dv = c (1 - y^e) F3(y^e)^2", dy, shape * const))
    return {"reports": reports, "constant": const}

