"""q-expansions at the cusp at infinity: eta quotients, theta constants, E2,
the generator sets for Gamma_0(3) and Gamma_0(2), Hauptmoduln and the
Ramanujan-system checker.

Level-2 objects are always handled through their squares so every expansion
stays rational.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .reports import match_report
from .series import FracSeries, PowerSeries, fraction_pair

INFINITY_CUSP = "infinity_cusp"
ELLIPTIC_POINT = "elliptic_point"


@dataclass(frozen=True)
class FormDescriptor:
    name: str
    level: int
    weight: Fraction
    expansion_point: str
    series: object

    def to_json(self):
        data = self.series.to_json()
        data.update(
            name=self.name,
            level=self.level,
            weight=fraction_pair(self.weight),
            expansion_point=self.expansion_point,
        )
        return data


def _check_order(order):
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"order must be a nonnegative integer, got {order!r}")


def euler_product(multiplier, order):
    """prod_{n>=1} (1 - q^(m n)) to degree ``order``, via the pentagonal number theorem."""
    _check_order(order)
    if multiplier < 1:
        raise ValueError("multiplier must be positive")
    coeffs = [0] * (order + 1)
    k = 0
    while True:
        progressed = False
        for j in ((k, -k) if k else (0,)):
            e = multiplier * j * (3 * j - 1) // 2
            if e <= order:
                coeffs[e] += -1 if j % 2 else 1
                progressed = True
        if not progressed:
            break
        k += 1
    return PowerSeries(coeffs, order, "q")


def eta_series(multiplier, order):
    """eta(m tau) = q^(m/24) prod (1 - q^(m n)) with body known to degree ``order``."""
    return FracSeries(Fraction(multiplier, 24), euler_product(multiplier, order))


def eta_quotient(factors, order, scale=1):
    """scale * prod eta(m tau)^r for (m, r) in ``factors``."""
    offset = sum(Fraction(m * r, 24) for m, r in factors)
    body = PowerSeries.constant(scale, order, "q")
    for m, r in factors:
        body = body * euler_product(m, order) ** r
    return FracSeries(offset, body)


def theta_series(which, multiplier, order):
    """theta3(m tau) = sum q^(m n^2/2) and theta2(m tau) = sum q^(m (n+1/2)^2/2) for even m."""
    _check_order(order)
    if multiplier < 2 or multiplier % 2:
        raise ValueError("theta constants are only provided at even multiples of tau")
    h = multiplier // 2
    coeffs = [0] * (order + 1)
    if which == "theta3":
        n = 0
        while h * n * n <= order:
            coeffs[h * n * n] += 1 if n == 0 else 2
            n += 1
        return FracSeries(0, PowerSeries(coeffs, order, "q"))
    if which == "theta2":
        # (n + 1/2)^2 / 2 * m = m/8 + h * n (n + 1); n and -1-n give the same term
        n = 0
        while h * n * (n + 1) <= order:
            coeffs[h * n * (n + 1)] += 2
            n += 1
        return FracSeries(Fraction(multiplier, 8), PowerSeries(coeffs, order, "q"))
    raise ValueError(f"unknown theta constant {which!r}")


def sigma1(n):
    return sum(d for d in range(1, n + 1) if n % d == 0)


def eisenstein_e2(multiplier, order):
    """E2(m tau) = 1 - 24 sum sigma_1(n) q^(m n)."""
    _check_order(order)
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    n = 1
    while multiplier * n <= order:
        coeffs[multiplier * n] = -24 * sigma1(n)
        n += 1
    return PowerSeries(coeffs, order, "q")


def _descriptor(name, level, weight, series):
    return FormDescriptor(name, level, Fraction(weight), INFINITY_CUSP, series)


@lru_cache(maxsize=32)
def generators(level, order, e3_denominator=4):
    """Generators at the infinity cusp, keyed A, B, C, E.

    Level 3 gives A3, B3, C3, E3 (weights 1, 1, 1, 2) with C3 the generator
    that vanishes at the cusp.  Level 2 gives the squares A2^2, B2^2, C2^2
    and the weight-2 E generator.  ``e3_denominator`` exists only so the
    wrong normalization can be exercised as a negative control.
    """
    _check_order(order)
    if level == 3:
        a = (theta_series("theta2", 2, order) * theta_series("theta2", 6, order)
             + theta_series("theta3", 2, order) * theta_series("theta3", 6, order)).to_power_series().truncate(order)
        b = eta_quotient([(1, 3), (3, -1)], order).to_power_series()
        c = eta_quotient([(3, 3), (1, -1)], order, scale=3)
        e = (eisenstein_e2(3, order) * 3 + eisenstein_e2(1, order)) / e3_denominator
        return {
            "A": _descriptor("A3", 3, 1, a),
            "B": _descriptor("B3", 3, 1, b),
            "C": _descriptor("C3", 3, 1, c),
            "E": _descriptor("E3", 3, 2, e),
        }
    if level == 2:
        b2 = eta_quotient([(1, 8), (2, -4)], order).to_power_series()
        c2 = eta_quotient([(2, 8), (1, -4)], order, scale=8)
        a2 = (b2 * b2 + (c2 * c2).to_power_series()).nth_root(2)
        e = (eisenstein_e2(2, order) * 2 + eisenstein_e2(1, order)) / 3
        return {
            "A": _descriptor("A2sq", 2, 2, a2),
            "B": _descriptor("B2sq", 2, 2, b2),
            "C": _descriptor("C2sq", 2, 2, c2),
            "E": _descriptor("E2gen", 2, 2, e),
        }
    raise ValueError(f"unsupported level {level}; only 2 and 3 are implemented")


def hauptmodul(level, order):
    """alpha = C^r / A^r, vanishing at the cusp: 27q + ... (level 3), 64q + ... (level 2)."""
    g = generators(level, order)
    a, c = g["A"].series, g["C"].series
    if level == 3:
        return (c**3 / a**3).normalize()
    return (c * c / (a * a)).normalize()


def ramanujan_residuals(gens, level):
    """Pairs (name, lhs, rhs) for the Ramanujan system of the given generator set."""
    a, b, c, e = (gens[k].series for k in "ABCE")
    a, b, c, e = (FracSeries.lift(s) for s in (a, b, c, e))
    if level == 3:
        sixth = Fraction(1, 6)
        return [
            ("theta A3 = (A3 E3 + 2 C3^3 - A3^3)/6", a.theta(), (a * e + c**3 * 2 - a**3) * sixth),
            ("theta B3 = B3 (E3 - A3^2)/6", b.theta(), b * (e - a * a) * sixth),
            ("theta C3 = C3 (E3 + A3^2)/6", c.theta(), c * (e + a * a) * sixth),
            ("theta E3 = (E3^2 - A3^4)/6", e.theta(), (e * e - a**4) * sixth),
            ("A3^3 = B3^3 + C3^3", a**3, b**3 + c**3),
        ]
    quarter = Fraction(1, 4)
    return [
        ("theta A2^2 = (A2^2 E + 2 C2^4 - A2^4)/4", a.theta(), (a * e + c * c * 2 - a * a) * quarter),
        ("theta B2^2 = B2^2 (E - A2^2)/4", b.theta(), b * (e - a) * quarter),
        ("theta C2^2 = C2^2 (E + A2^2)/4", c.theta(), c * (e + a) * quarter),
        ("theta E = (E^2 - A2^4)/8", e.theta(), (e * e - a * a) * Fraction(1, 8)),
        ("A2^4 = B2^4 + C2^4", a * a, b * b + c * c),
    ]


def verify_ramanujan(level, r, order, e3_denominator=4):
    """Match reports for every Ramanujan identity at (level, r) in {(3,3), (2,4)}."""
    if (level, r) not in ((3, 3), (2, 4)):
        raise ValueError(f"unsupported (N, r) = ({level}, {r})")
    gens = generators(level, order, e3_denominator)
    return [match_report(name, lhs, rhs) for name, lhs, rhs in ramanujan_residuals(gens, level)]


def verify_hauptmodul(level, order):
    """theta alpha = alpha (1 - alpha) A^2 (A^2 meaning the squared generator at level 2)."""
    alpha = hauptmodul(level, order)
    a = generators(level, order)["A"].series
    a2 = a * a if level == 3 else a
    return match_report("theta alpha = alpha (1 - alpha) A^2", alpha.theta(), alpha * (1 - alpha) * a2)
