"""Matching the orbifold GW theory with the FJRW theory through the holomorphic limit.

Elliptic-side series are in v and FJRW series in u; the two variables are
identified directly.  Everything is compared coefficient by coefficient.
"""
from dataclasses import dataclass
from fractions import Fraction

from .cayley import holomorphic_limit
from .cyclotomic import SQRT2, SQRT3, CycScalar
from .fjrw import (
    CUBIC_COORDS,
    PILLOW_V_COORDS,
    derived_series,
    fjrw_genus_one,
    fjrw_prepotential,
    solve_wdvv,
    state_space,
    transformed_pairing,
)
from .gw import gw_building_blocks, gw_genus_one, gw_prepotential
from .reports import match_report

# q-order used to decompose GW coefficients into generator polynomials; far
# more equations than unknowns for every weight that occurs
DECOMPOSE_ORDER = 16

LAMBDA = CycScalar.rational(1) / SQRT3


class IsomorphismError(ValueError):
    pass


@dataclass(frozen=True)
class StateIso:
    case: str
    labels: tuple           # GW basis, as listed in the isomorphism table
    gw_degrees: tuple
    gw_pairing: tuple
    images: tuple           # (CycScalar multiple, FJRW index) per GW basis element
    fjrw_degrees: tuple
    fjrw_pairing: tuple
    lam: CycScalar

    def image_pairing(self, a, b):
        sa, ia = self.images[a]
        sb, ib = self.images[b]
        return sa * sb * self.fjrw_pairing[ia][ib]


def _cyc(x):
    return x if isinstance(x, CycScalar) else CycScalar.rational(x)


def build_iso(case):
    """The degree- and pairing-preserving map from the GW state space to the FJRW one."""
    F = Fraction
    if case == "cubic":
        space = state_space("cubic")
        labels = ("1", "D1", "D2", "D3", "3D3^2", "3D2^2", "3D1^2", "P")
        gw_degrees = (F(0),) + (F(1, 3),) * 3 + (F(2, 3),) * 3 + (F(1),)
        # eta(1, P) = 1 and eta(D_i, D_i^2) = 1/3, so eta(D_i, 3 D_i^2) = 1
        gw_pairing = tuple(tuple(F(1 if a + b == 7 else 0) for b in range(8)) for a in range(8))
        inv = CycScalar.rational(1) / LAMBDA
        images = ((_cyc(1), 0),) + tuple((LAMBDA, i) for i in (1, 2, 3)) + tuple((inv, i) for i in (4, 5, 6)) + ((_cyc(1), 7),)
        fjrw_degrees = tuple(e.degree for e in space.elements)
        fjrw_pairing = tuple(tuple(_cyc(x) for x in row) for row in space.pairing)
        lam = LAMBDA
    elif case == "pillowcase":
        space = state_space("pillowcase")
        labels = ("1", "sqrt2*D1", "sqrt2*D2", "sqrt2*D3", "sqrt2*D4", "P")
        gw_degrees = (F(0),) + (F(1, 2),) * 4 + (F(1),)
        # eta(D_i, D_j) = delta_ij / 2
        gw_pairing = tuple(
            tuple(F(1) if (a, b) in ((0, 5), (5, 0)) or (a == b and 1 <= a <= 4) else F(0) for b in range(6))
            for a in range(6)
        )
        images = tuple((_cyc(1), i) for i in range(6))
        fjrw_pairing = tuple(tuple(row) for row in transformed_pairing())
        fjrw_degrees = _rotated_degrees(space)
        lam = SQRT2
    else:
        raise ValueError(f"unknown case {case!r}")
    iso = StateIso(case, labels, gw_degrees, gw_pairing, images, fjrw_degrees, fjrw_pairing, lam)
    _check_iso(iso)
    return iso


def _rotated_degrees(space):
    """Degrees of the rotated pillowcase basis; each vector must be homogeneous."""
    from .fjrw import pillowcase_basis_change

    images = pillowcase_basis_change()
    out = []
    for j in range(6):
        unit = tuple(1 if k == j else 0 for k in range(6))
        degrees = {space.elements[i].degree for i in range(6) if images[i].coefficient(unit)}
        if len(degrees) != 1:
            raise IsomorphismError(f"rotated basis vector {j} mixes degrees {sorted(degrees)}")
        out.append(degrees.pop())
    return tuple(out)


def _check_iso(iso):
    n = len(iso.labels)
    for a in range(n):
        if iso.gw_degrees[a] != iso.fjrw_degrees[iso.images[a][1]]:
            raise IsomorphismError(f"degree of {iso.labels[a]} is not preserved")
        for b in range(n):
            if _cyc(iso.gw_pairing[a][b]) != iso.image_pairing(a, b):
                raise IsomorphismError(f"pairing of ({iso.labels[a]}, {iso.labels[b]}) is not preserved")


# -- building blocks -------------------------------------------------------

def _level(case):
    return 3 if case == "cubic" else 2


def _hol(series, weight, case, order):
    return holomorphic_limit(series, weight, _level(case), order).with_variable("u")


def match_building_blocks(case, order, e3_denominator=4):
    """Holomorphic limits of the GW building blocks against the FJRW series."""
    blocks = gw_building_blocks(case, DECOMPOSE_ORDER, e3_denominator)
    f = solve_wdvv(case, order)
    if case == "cubic":
        pairs = [
            ("C(3 M1) = f1", blocks["M1"], 3, f["f1"]),
            ("C(3 M2) = f2", blocks["M2"], 3, f["f2"]),
            ("C_hol(3 M3) = f3", blocks["M3"], 3, f["f3"]),
        ]
    else:
        pairs = [
            ("C_hol(2 X) = -f1", blocks["X"], 2, -f["f1"]),
            ("C_hol(2 Y) = 2 f2 + f3", blocks["Y"], 2, f["f2"] * 2 + f["f3"]),
            ("C_hol(2 Z) = f3", blocks["Z"], 2, f["f3"]),
        ]
    return [
        match_report(name, _hol(series * factor, weight, case, order), rhs)
        for name, (series, weight), factor, rhs in pairs
    ]


def lambda_bookkeeping(order):
    """The cubic blocks in the unscaled GW basis carry sqrt3^(k-2) and lambda^(+-1) per insertion."""
    blocks = gw_building_blocks("cubic", DECOMPOSE_ORDER)
    f = solve_wdvv("cubic", order)
    lam, inv = LAMBDA, CycScalar.rational(1) / LAMBDA
    checks = [
        ("C(M1) = sqrt3 <l phi1, l phi2, l phi3>", blocks["M1"], 1, SQRT3 * lam**3, f["f1"]),
        ("C(M2) = sqrt3 <l phi1, l phi1, l phi1>", blocks["M2"], 1, SQRT3 * lam**3, f["f2"]),
        ("C_hol(9 M3) = 3 <l phi1, l phi1, phi6/l, phi6/l>", blocks["M3"], 9, SQRT3**2 * lam * lam * inv * inv, f["f3"]),
    ]
    reports = []
    for name, (series, weight), factor, scalar, fser in checks:
        lhs = _hol(series * factor, weight, "cubic", order)
        rhs = (fser * scalar).to_rational()
        reports.append(match_report(name, lhs, rhs))
    return reports


# -- prepotentials ---------------------------------------------------------

def coordinate_dictionary(case):
    """(FJRW coordinate names, per-coordinate scale, weight factor c).

    A GW monomial with d >= 2 twisted coordinates t_i = s_i x_i picks up
    prod s_i^(e_i) * c^(d - 2).
    """
    if case == "cubic":
        return CUBIC_COORDS, (CycScalar.rational(1),) * 8, CycScalar.rational(1)
    half = CycScalar.rational(1) / SQRT2
    return PILLOW_V_COORDS, (CycScalar.rational(1),) + (SQRT2,) * 4 + (CycScalar.rational(1),), half


def monomial_factor(case, exps):
    _, scales, c = coordinate_dictionary(case)
    d = sum(exps[1:-1])
    out = CycScalar.rational(1)
    for s, e in zip(scales, exps):
        out = out * s**e
    if d >= 2:
        out = out * c ** (d - 2)
    elif d == 1:
        raise ValueError("a monomial with a single twisted coordinate cannot occur")
    return out.to_rational()


def match_prepotential(case, order, e3_denominator=4):
    """Per-monomial comparison of C_hol of the GW potential with the FJRW potential."""
    gw = gw_prepotential(case, DECOMPOSE_ORDER, e3_denominator)
    fj = fjrw_prepotential(case, order, "v" if case == "pillowcase" else "u")
    names = fj.variables
    reports = []
    zero = solve_wdvv(case, order)["f1"] * 0
    for exps in sorted(set(gw.terms) | set(fj.terms)):
        mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(names, exps) if k)
        rhs = fj.terms.get(exps, zero)
        if exps in gw.terms:
            weight = max(sum(exps[1:-1]) - 2, 0)
            lhs = _hol(gw.terms[exps] * monomial_factor(case, exps), weight, case, order)
        else:
            lhs = zero
        reports.append(match_report(f"coefficient of {mono}", lhs, rhs))
    return reports


def match_genus_one(order, e3_denominator=4):
    """C_hol((A3^2 - 2 E3)/12) = 3 (6 f3 + f2^2)/36."""
    lhs = _hol(gw_genus_one("cubic", DECOMPOSE_ORDER, e3_denominator), 2, "cubic", order)
    rhs = fjrw_genus_one("cubic", order) * 3
    return match_report("C_hol((A3^2 - 2 E3)/12) = 3 (6 f3 + f2^2)/36", lhs, rhs)


def verify_correspondence(case, order, e3_denominator=4):
    """The three building-block identities of a case."""
    return match_building_blocks(case, order, e3_denominator)


def derived_block_table(case, order):
    """FJRW blocks keyed by name, for display."""
    out = dict(solve_wdvv(case, order))
    out.update(derived_series(case, order))
    return out

