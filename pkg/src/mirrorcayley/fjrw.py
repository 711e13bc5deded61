"""Landau-Ginzburg side: state spaces, selection rules, WDVV systems and prepotentials.

Two cases are supported: ``cubic`` (W = x1^3 + x2^3 + x3^3 with its full
diagonal symmetry group) and ``pillowcase`` (W = x1^4 + x2^4 + x3^2 with
G1 = <J, sigma> on the first two variables times Aut(x3^2)).

Group elements are stored by their phases Theta in [0, 1)^n, so that
h = (exp(2 pi i Theta_1), ..., exp(2 pi i Theta_n)).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .cyclotomic import SQRT2, CycScalar, exp_pi_i
from .polynomial import Poly
from .reports import match_report
from .series import PowerSeries

CASES = ("cubic", "pillowcase")
F = Fraction


class WdvvError(ValueError):
    pass


def _check_case(case):
    if case not in CASES:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES}")


# -- pair data -------------------------------------------------------------

def _mod1(theta):
    return tuple(t - (t.numerator // t.denominator) for t in theta)


def group_closure(generators):
    """All products of the generators (phase vectors added mod 1)."""
    n = len(generators[0])
    identity = (F(0),) * n
    elements = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in generators:
                p = _mod1(tuple(a + b for a, b in zip(h, g)))
                if p not in elements:
                    elements.add(p)
                    nxt.append(p)
        frontier = nxt
    return frozenset(elements)


@dataclass(frozen=True)
class PairData:
    case: str
    weights: tuple
    group: frozenset
    core_group: frozenset
    j_w: tuple

    @property
    def central_charge(self):
        return sum(1 - 2 * q for q in self.weights)


def build_pair_data(case):
    _check_case(case)
    if case == "cubic":
        weights = (F(1, 3),) * 3
        gens = [(F(1, 3), F(0), F(0)), (F(0), F(1, 3), F(0)), (F(0), F(0), F(1, 3))]
        group = group_closure(gens)
        core = group
    else:
        weights = (F(1, 4), F(1, 4), F(1, 2))
        j = (F(1, 4), F(1, 4))
        sigma = (F(0), F(1, 2))
        core = group_closure([j, sigma])
        group = frozenset(h + (t,) for h in core for t in (F(0), F(1, 2)))
    if sum(weights) != 1:
        raise ValueError("Calabi-Yau condition sum q_i = 1 fails")
    j_w = _mod1(weights)
    if j_w not in group:
        raise ValueError("exponential grading element is not in the group")
    return PairData(case, weights, group, core, j_w)


# -- state spaces ----------------------------------------------------------

@dataclass(frozen=True)
class StateElement:
    label: str
    theta: tuple
    fix_dim: int
    degree: Fraction
    kind: str


@dataclass(frozen=True)
class StateSpace:
    case: str
    weights: tuple
    elements: tuple
    pairing: tuple

    def index(self, label):
        return next(i for i, e in enumerate(self.elements) if e.label == label)

    def to_json(self):
        return {
            "case": self.case,
            "weights": [[w.numerator, w.denominator] for w in self.weights],
            "elements": [
                {
                    "label": e.label,
                    "theta": [[t.numerator, t.denominator] for t in e.theta],
                    "fix_dim": e.fix_dim,
                    "degree": [e.degree.numerator, e.degree.denominator],
                    "kind": e.kind,
                }
                for e in self.elements
            ],
            "pairing": [[[p.numerator, p.denominator] for p in row] for row in self.pairing],
        }


def w_degree(theta, weights):
    """N_h/2 + sum(Theta_i - q_i), with N_h the number of fixed coordinates."""
    n_fix = sum(1 for t in theta if t == 0)
    return F(n_fix, 2) + sum(t - q for t, q in zip(theta, weights))


def _element(label, theta, weights):
    theta = tuple(F(t) for t in theta)
    n_fix = sum(1 for t in theta if t == 0)
    return StateElement(label, theta, n_fix, w_degree(theta, weights), "broad" if n_fix else "narrow")


def state_space(case):
    pair = build_pair_data(case)
    w = pair.weights
    if case == "cubic":
        table = [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2), (2, 2, 1), (2, 1, 2), (1, 2, 2), (2, 2, 2)]
        elements = tuple(_element(f"phi{i}", [F(k, 3) for k in t], w) for i, t in enumerate(table))
        pairing = tuple(tuple(F(1 if i + j == 7 else 0) for j in range(8)) for i in range(8))
    else:
        # J = (i, i), sigma = (1, -1) on x1, x2; x3 always carries the phase 1/2
        table = [
            ("phi0", (F(1, 4), F(1, 4))),   # J
            ("phi1", (F(1, 4), F(3, 4))),   # J sigma
            ("phi2", (F(1, 2), F(1, 2))),   # J^2
            ("phi3", (F(3, 4), F(1, 4))),   # J^3 sigma
            ("R", (F(0), F(0))),             # identity, broad
            ("phi5", (F(3, 4), F(3, 4))),   # J^3
        ]
        for _, th in table:
            if th not in pair.core_group:
                raise ValueError("state label refers to an element outside G1")
        elements = tuple(_element(label, th + (F(1, 2),), w) for label, th in table)
        nonzero = {(0, 5), (5, 0), (1, 3), (3, 1), (2, 2), (4, 4)}
        pairing = tuple(tuple(F(1 if (i, j) in nonzero else 0) for j in range(6)) for i in range(6))
    return StateSpace(case, w, elements, pairing)


def axiom_checks(space, genus, insertions, psi_powers=None):
    """Degree Axiom and Selection Rule for a correlator with the given insertion indices."""
    k = len(insertions)
    psi_powers = psi_powers or [0] * k
    c_hat = sum(1 - 2 * q for q in space.weights)
    degrees = sum(space.elements[i].degree for i in insertions)
    degree_ok = c_hat * (genus - 1) + degrees + sum(psi_powers) == 3 * (genus - 1) + k
    selection_ok = True
    for var, q in enumerate(space.weights):
        value = q * (2 * genus - 2 + k) - sum(space.elements[i].theta[var] for i in insertions)
        if value.denominator != 1:
            selection_ok = False
    return {"degree_ok": degree_ok, "selection_ok": selection_ok}


# -- ODE systems -----------------------------------------------------------

@dataclass(frozen=True)
class OdeSystem:
    """y_i' = P_i(y) with polynomial P_i, solved coefficient by coefficient."""

    unknowns: tuple
    field: tuple        # Poly per unknown
    initial: tuple

    def solve(self, order, variable="u"):
        coeffs = [[F(c)] for c in self.initial]
        for n in range(order):
            current = [PowerSeries(c, n, variable) for c in coeffs]
            zero = PowerSeries.constant(0, n, variable)
            for i, p in enumerate(self.field):
                rhs = p.evaluate(current, zero)
                coeffs[i].append(rhs[n] / (n + 1))
        return {name: PowerSeries(c, order, variable) for name, c in zip(self.unknowns, coeffs)}


def wdvv_system(case):
    _check_case(case)
    names = ("f1", "f2", "f3")
    f1, f2, f3 = (Poly.var(names, n) for n in names)
    if case == "cubic":
        field = (
            f1 * (f2 * f2 - 3 * f3) / 6,
            (2 * f1**3 - f2**3 - 3 * f2 * f3) / 6,
            -(f3 * f3) / 2 + f2**4 / 18,
        )
        initial = (1, 0, 0)
    else:
        df3 = f1 * f1 - f3 * f3
        field = (-2 * f1 * f2, -df3 - 2 * f2 * f3, df3)
        initial = (F(-1, 4), 0, 0)
    return OdeSystem(names, field, initial)


@lru_cache(maxsize=16)
def _solve_cached(case, order):
    return wdvv_system(case).solve(order)


def solve_wdvv(case, order):
    """The three basic u-series f1, f2, f3."""
    if order < 1:
        raise ValueError("order must be at least 1")
    return dict(_solve_cached(case, order))


def derived_series(case, order):
    """Remaining correlation functions from their closed forms in f1, f2, f3."""
    f = solve_wdvv(case, order)
    f1, f2, f3 = f["f1"], f["f2"], f["f3"]
    if case == "cubic":
        return {"f4": f1 * f2 / 3, "f5": f1 * f1 / 3, "f6": (f3 * 3 + f2 * f2) / 6}
    zero = PowerSeries.constant(0, order, "u")
    return {
        "g1": -f1,
        "g2": f2 + f3 * 2,
        "g3": f3,
        "g4": f3 - f2,
        "g5": zero,
        "g6": f2 + f3,
        "f4": f2 + f3 * 2,
    }


def wdvv_identities(case, order):
    """(name, lhs, rhs) for every WDVV relation among the correlation functions."""
    s = dict(solve_wdvv(case, order))
    s.update(derived_series(case, order))

    def d(name):
        return s[name].derive()

    if case == "cubic":
        f1, f2, f3, f4, f5, f6 = (s[f"f{i}"] for i in range(1, 7))
        return [
            ("f1 f4 = f2 f5", f1 * f4, f2 * f5),
            ("f1 f5 = f2' + f2 f6", f1 * f5, d("f2") + f2 * f6),
            ("2 f1 f6 = f1 f3 + f2 f4", f1 * f6 * 2, f1 * f3 + f2 * f4),
            ("f1 f5' = 2 f5 f1'", f1 * d("f5"), f5 * d("f1") * 2),
            ("f1 f3' = 2 f6 f1'", f1 * d("f3"), f6 * d("f1") * 2),
            ("f1 f6 = f1' + f1 f3", f1 * f6, d("f1") + f1 * f3),
        ]
    f1, f2, f3, f4 = (s[f"f{i}"] for i in range(1, 5))
    g1, g2, g3, g4, g5, g6 = (s[f"g{i}"] for i in range(1, 7))
    return [
        ("f1' + 2 f1 f2 = 0", d("f1") + f1 * f2 * 2, 0),
        ("f2' + 2 f2 f3 + f3' = 0", d("f2") + f2 * f3 * 2 + d("f3"), 0),
        ("f3' + f3^2 = f1^2", d("f3") + f3 * f3, f1 * f1),
        ("f4' + 2 f4 f2 + f2' = 2 f2^2", d("f4") + f4 * f2 * 2 + d("f2"), f2 * f2 * 2),
        ("f4' + 2 f4 f3 + f3' = 2 f3^2 + 2 f1^2", d("f4") + f4 * f3 * 2 + d("f3"), (f3 * f3 + f1 * f1) * 2),
        ("g1' + 2 g2 g1 = 4 g1 g3", d("g1") + g2 * g1 * 2, g1 * g3 * 4),
        ("g2' + 2 g3 g2 + g3' = 2 g1^2 + 2 g3^2", d("g2") + g3 * g2 * 2 + d("g3"), (g1 * g1 + g3 * g3) * 2),
        ("g3' + g3^2 = g1^2", d("g3") + g3 * g3, g1 * g1),
        ("g4' + 2 g3 g4 + 2 g1 g5 = 2 g1^2", d("g4") + g3 * g4 * 2 + g1 * g5 * 2, g1 * g1 * 2),
        # the (1,3,2,2), S={1,1} relation with g6 in the second term
        ("g1' + 2 g6 g1 + 2 g5 g3 + g5' = 2 g1 g3", d("g1") + g6 * g1 * 2 + g5 * g3 * 2 + d("g5"), g1 * g3 * 2),
        ("2 g6' = g4^2 - g6^2", d("g6") * 2, g4 * g4 - g6 * g6),
        ("g5' + 2 g5 g6 = g5 g6 + g5 g4", d("g5") + g5 * g6 * 2, g5 * g6 + g5 * g4),
        ("g6' + 2 g1 g5 + 2 g3 g6 = 2 g3^2", d("g6") + g1 * g5 * 2 + g3 * g6 * 2, g3 * g3 * 2),
        ("g5' + g1 (g4 + g6) + 2 g3 g5 = 2 g1 g3", d("g5") + g1 * (g4 + g6) + g3 * g5 * 2, g1 * g3 * 2),
    ]


def verify_wdvv(case, order):
    out = []
    for name, lhs, rhs in wdvv_identities(case, order):
        if not isinstance(rhs, PowerSeries):
            rhs = PowerSeries.constant(rhs, lhs.trunc, lhs.variable)
        out.append(match_report(name, lhs, rhs))
    return out


def derived_blocks(case, order):
    """Closed-form correlation functions, after checking every WDVV relation."""
    for report in verify_wdvv(case, order):
        if report["first_mismatch"] is not None:
            raise WdvvError(f"WDVV relation fails: {report}")
    return derived_series(case, order)


# -- prepotentials ---------------------------------------------------------

CUBIC_COORDS = tuple(f"u{i}" for i in range(8))
PILLOW_COORDS = tuple(f"u{i}" for i in range(6))
PILLOW_V_COORDS = tuple(f"v{i}" for i in range(6))


def cubic_template(f1, f2, f3, one, coords=CUBIC_COORDS):
    """Genus-zero potential in eight coordinates built from three block series.

    Coordinate 7 pairs with coordinate 0; coordinate i pairs with 7 - i.
    """
    u0, u1, u2, u3, u4, u5, u6, u7 = (Poly.var(coords, c) for c in coords)
    terms = [
        (u0 * u0 * u7 / 2, one),
        (u0 * (u1 * u6 + u2 * u5 + u3 * u4), one),
        (u1 * u2 * u3, f1),
        ((u1**3 + u2**3 + u3**3) / 6, f2),
        (u1 * u2 * u5 * u6 + u1 * u3 * u4 * u6 + u2 * u3 * u4 * u5, (f3 * 3 + f2 * f2) / 6),
        ((u1 * u1 * u4 * u5 + u2 * u2 * u4 * u6 + u3 * u3 * u5 * u6) / 2, f1 * f1 / 3),
        ((u1 * u2 * u4 * u4 + u1 * u3 * u5 * u5 + u2 * u3 * u6 * u6) / 2, f1 * f2 / 3),
        ((u1 * u1 * u6 * u6 + u2 * u2 * u5 * u5 + u3 * u3 * u4 * u4) / 4, f3),
        ((u1 * u4 * u5 * u6 * u6 + u2 * u4 * u5 * u5 * u6 + u3 * u4 * u4 * u5 * u6) / 2, f1 * f1 * f2 / 9),
        ((u1 * u4 * u4 * u5 * u5 + u2 * u4 * u4 * u6 * u6 + u3 * u5 * u5 * u6 * u6) / 4, f1 * f2 * f2 / 9),
        ((u1 * u6 * (u4**3 + u5**3) + u2 * u5 * (u4**3 + u6**3) + u3 * u4 * (u5**3 + u6**3)) / 6, f1**3 / 9),
        ((u1 * u6**4 + u2 * u5**4 + u3 * u4**4) / 24, f2**3 / 9),
        (u4 * u4 * u5 * u5 * u6 * u6 / 8, (f1**4 * 2 + f1 * f2**3) / 27),
        ((u4**3 * u5**3 + u4**3 * u6**3 + u5**3 * u6**3) / 36, f1**3 * f2 / 9),
        ((u4 * u5 * u6**4 + u4 * u5**4 * u6 + u4**4 * u5 * u6) / 24, f1 * f1 * f2 * f2 / 9),
        ((u4**6 + u5**6 + u6**6) / 720, (f1**3 * f2 * 2 - f2**4) / 9),
    ]
    return _assemble(coords, terms)


def pillowcase_template(f1, f2, f3, one, coords=PILLOW_COORDS):
    """Genus-zero potential in u0..u5; u4 is the broad coordinate and u5 pairs with u0."""
    u0, u1, u2, u3, u4, u5 = (Poly.var(coords, c) for c in coords)
    terms = [
        (u0 * u0 * u5 / 2, one),
        (u0 * (u1 * u3 + u2 * u2 / 2 + u4 * u4 / 2), one),
        ((u1 * u1 + u3 * u3) * (u4 * u4 - u2 * u2) / 4, f1),
        ((-(u1**4) + u2**4 - u3**4 + u4**4) / 24 + (u1 * u1 * u3 * u3 + u2 * u2 * u4 * u4) / 4, f2),
        ((u1**4 + 2 * u2**4 + u3**4 + 2 * u4**4) / 24 + u1 * u1 * u3 * u3 / 4 + u1 * u3 * (u2 * u2 + u4 * u4) / 2, f3),
    ]
    return _assemble(coords, terms)


def _assemble(coords, terms):
    total = Poly(coords)
    for shape, coeff in terms:
        total = total + shape.map_coefficients(lambda c, coeff=coeff: coeff * c)
    return total


def pillowcase_basis_change():
    """u1..u4 as linear forms in v1..v4, exact over Q(zeta_24).

    u1 = (e^{3 pi i/4} v1 + e^{5 pi i/4} v3)/sqrt2, u3 = (e^{5 pi i/4} v1 + e^{3 pi i/4} v3)/sqrt2,
    u2 = (v2 + v4)/sqrt2, u4 = (v2 - v4)/sqrt2; u0 = v0 and u5 = v5.
    """
    v = [Poly.var(PILLOW_V_COORDS, c) for c in PILLOW_V_COORDS]
    s = CycScalar.rational(1) / SQRT2
    a, b = exp_pi_i(F(3, 4)) * s, exp_pi_i(F(5, 4)) * s
    return [
        v[0],
        v[1] * a + v[3] * b,
        (v[2] + v[4]) * s,
        v[1] * b + v[3] * a,
        (v[2] - v[4]) * s,
        v[5],
    ]


def _rationalize(poly):
    def fix(c):
        if isinstance(c, PowerSeries):
            return c.to_rational()
        if isinstance(c, CycScalar):
            return c.to_rational()
        return c

    return poly.map_coefficients(fix)


@lru_cache(maxsize=8)
def fjrw_prepotential(case, order, form="u"):
    """Genus-zero FJRW potential; ``form='v'`` gives the pillowcase in the rotated basis."""
    f = solve_wdvv(case, order)
    one = PowerSeries.constant(1, order, "u")
    if case == "cubic":
        if form != "u":
            raise ValueError("the rotated basis exists only for the pillowcase")
        return cubic_template(f["f1"], f["f2"], f["f3"], one)
    poly = pillowcase_template(f["f1"], f["f2"], f["f3"], one)
    if form == "u":
        return poly
    if form != "v":
        raise ValueError("form must be 'u' or 'v'")
    return _rationalize(poly.substitute(PILLOW_V_COORDS, pillowcase_basis_change()))


def transformed_pairing():
    """Pairing matrix of the rotated pillowcase basis, computed from the u-basis pairing."""
    space = state_space("pillowcase")
    images = pillowcase_basis_change()
    # column j of T holds the u-coordinates of rotated basis vector j
    T = [[images[i].coefficient(tuple(1 if k == j else 0 for k in range(6))) for j in range(6)] for i in range(6)]
    eta = space.pairing
    out = []
    for a in range(6):
        row = []
        for b in range(6):
            total = CycScalar()
            for i in range(6):
                for j in range(6):
                    if eta[i][j] and T[i][a] and T[j][b]:
                        total = total + T[i][a] * T[j][b] * eta[i][j]
            row.append(total)
        out.append(row)
    return out


def correlator(poly, indices):
    """Genus-zero correlator <phi_i1 ... phi_ik> read off as a derivative of the potential."""
    exps = [0] * len(poly.variables)
    for i in indices:
        exps[i] += 1
    c = poly.coefficient(exps)
    mult = 1
    for e in exps:
        mult *= factorial(e)
    return c * mult


def fjrw_genus_one(case, order):
    """Genus-one one-point function (6 f3 + f2^2)/36 of the cubic."""
    if case != "cubic":
        raise ValueError("no closed genus-one formula is available for the pillowcase")
    f = solve_wdvv(case, order)
    return (f["f3"] * 6 + f["f2"] * f["f2"]) / 36
