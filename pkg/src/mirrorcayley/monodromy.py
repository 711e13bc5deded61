"""Monodromy matrices, Gamma-value connection data and numeric continuation checks.

Integer matrix identities are exact.  Everything else runs in mpmath at an
explicit decimal precision and produces ``numeric_report`` dictionaries.
"""
from fractions import Fraction
from math import log, pi

import mpmath

from .cayley import cayley_expansions
from .hypergeom import level_data
from .qforms import generators
from .reports import numeric_report

# kappa is i/sqrt(3) at level 3 and i/sqrt(2) at level 2
_KAPPA_DENOM = {3: 3, 2: 2}


# -- exact 2x2 integer matrices -----------------------------------------------

def matmul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def det(a):
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


IDENTITY = ((1, 0), (0, 1))
M_INF = ((1, 1), (0, 1))
M_ZERO = ((1, 0), (-3, 1))
M_ORB = ((-2, -1), (3, 1))


def monodromy_suite(level=3):
    """Exact checks on the level-3 local monodromies around infinity, zero and the orbifold point."""
    if level != 3:
        raise ValueError("integer monodromy matrices are only provided at level 3")
    product = matmul(matmul(M_ORB, M_ZERO), M_INF)
    cube = matmul(matmul(M_ORB, M_ORB), M_ORB)
    s = ((0, -1), (1, 0))
    t3 = matmul(matmul(M_INF, M_INF), M_INF)
    minus_st3s = tuple(tuple(-x for x in row) for row in matmul(matmul(s, t3), s))
    checks = {
        "M_orb M_0 M_inf = Id": product == IDENTITY,
        "det M_inf = det M_0 = det M_orb = 1": det(M_INF) == det(M_ZERO) == det(M_ORB) == 1,
        "M_orb^3 = Id": cube == IDENTITY,
        "trace M_orb = -1": M_ORB[0][0] + M_ORB[1][1] == -1,
        "M_0 = -S T^3 S": minus_st3s == M_ZERO,
    }
    return {
        "matrices": {"M_inf": M_INF, "M_0": M_ZERO, "M_orb": M_ORB},
        "product": product,
        "cube": cube,
        "checks": checks,
        "pass": all(checks.values()),
    }


# -- Gamma function ------------------------------------------------------------

def spouge_parameter(digits):
    """Smallest a with Spouge's relative error bound a^(-1/2) (2 pi)^-(a + 1/2) below 10^-digits."""
    a = 2
    while -0.5 * log(a) - (a + 0.5) * log(2 * pi) > -digits * log(10):
        a += 1
    return a


def spouge_gamma(z, digits):
    """Gamma(z) to about ``digits`` significant digits, for z away from the poles."""
    a = spouge_parameter(digits + 5)
    with mpmath.workdps(digits + a + 15):
        z = mpmath.mpmathify(z)
        if mpmath.re(z) < 0.5:
            return +(mpmath.pi / (mpmath.sin(mpmath.pi * z) * spouge_gamma(1 - z, digits)))
        x = z - 1
        total = mpmath.sqrt(2 * mpmath.pi)
        factorial = mpmath.mpf(1)
        for k in range(1, a):
            if k > 1:
                factorial *= k - 1
            c = (-1) ** (k - 1) / factorial * mpmath.power(a - k, k - mpmath.mpf(1) / 2) * mpmath.exp(a - k)
            total += c / (x + k)
        value = mpmath.power(x + a, x + mpmath.mpf(1) / 2) * mpmath.exp(-(x + a)) * total
    return +value


def reflection_check(precision=50):
    """Gamma(x) Gamma(1 - x) = pi / sin(pi x) for x = 1/3 and 1/4."""
    with mpmath.workdps(precision):
        err = mpmath.mpf(0)
        for x in (mpmath.mpf(1) / 3, mpmath.mpf(1) / 4):
            lhs = spouge_gamma(x, precision) * spouge_gamma(1 - x, precision)
            err = max(err, abs(lhs - mpmath.pi / mpmath.sin(mpmath.pi * x)))
        return numeric_report("Gamma(x) Gamma(1-x) = pi/sin(pi x)", _tolerance(precision), err)


def _tolerance(precision):
    return mpmath.mpf(10) ** (-(precision - 10))


def gamma_constants(level, precision=50):
    """gamma_plus, gamma_minus, kappa, K, tau_star and the base value of the level.

    gamma_+ = Gamma(b - a)/(Gamma(1 - a) Gamma(b)) and gamma_- = Gamma(a - b)/(Gamma(1 - b) Gamma(a))
    with b = 1 - a; tau_* = kappa e^(-pi i a) and K = kappa (e^(-pi i b) - e^(-pi i a)).
    """
    if precision < 30:
        raise ValueError("precision must be at least 30 digits")
    d = level_data(level)
    with mpmath.workdps(precision + 10):
        a = mpmath.mpf(d.a.numerator) / d.a.denominator
        b = 1 - a
        g = lambda x: spouge_gamma(x, precision + 10)  # noqa: E731
        gp = g(b - a) / (g(1 - a) * g(b))
        gm = g(a - b) / (g(1 - b) * g(a))
        kappa, tau, K = _base_point(level)
        out = {"a": a, "gamma_plus": gp, "gamma_minus": gm, "kappa": kappa, "K": K, "tau_star": tau}
        out["K_identity_error"] = abs(-K - (tau - mpmath.conj(tau)))
        if level == 3:
            # value of C3 at tau_*; the branch carries exp(+pi i a)
            omega = gp * mpmath.expjpi(a)
            out["base_value"] = omega
            out["M"] = omega**2
        else:
            out["M"] = c2sq_numeric(tau)
            out["base_value"] = out["M"]
        return out


def _base_point(level):
    """(kappa, tau_*, K) at the current working precision."""
    a = level_data(level).a
    a = mpmath.mpf(a.numerator) / a.denominator
    kappa = 1j / mpmath.sqrt(_KAPPA_DENOM[level])
    tau = kappa * mpmath.expjpi(-a)
    K = kappa * (mpmath.expjpi(a - 1) - mpmath.expjpi(-a))
    return kappa, tau, K


# -- numeric modular forms -----------------------------------------------------

def _q(tau):
    return mpmath.exp(2j * mpmath.pi * tau)


def _eta(tau):
    return mpmath.exp(2j * mpmath.pi * tau / 24) * mpmath.qp(_q(tau))


def c3_numeric(tau):
    return 3 * _eta(3 * tau) ** 3 / _eta(tau)


def b3_numeric(tau):
    return _eta(tau) ** 3 / _eta(3 * tau)


def _triangular_sum(x):
    """sum over n >= 0 of x^(n (n + 1))."""
    eps = mpmath.mpf(10) ** (-mpmath.mp.dps - 5)
    total, n = mpmath.mpf(0), 0
    while True:
        term = x ** (n * (n + 1))
        total += term
        if abs(term) < eps:
            return total
        n += 1


def a3_numeric(tau):
    """theta3(2 tau) theta3(6 tau) + theta2(2 tau) theta2(6 tau).

    The theta2 product is written as 4 q S(q) S(q^3) so no fractional power of
    a complex nome is taken.
    """
    q = _q(tau)
    return mpmath.jtheta(3, 0, q) * mpmath.jtheta(3, 0, q**3) + 4 * q * _triangular_sum(q) * _triangular_sum(q**3)


def c2sq_numeric(tau):
    return 8 * _eta(2 * tau) ** 8 / _eta(tau) ** 4


def e2_numeric(tau):
    """1 - 24 sum n q^n / (1 - q^n), summed until terms drop below the working precision."""
    q = _q(tau)
    eps = mpmath.mpf(10) ** (-mpmath.mp.dps - 5)
    total, n, qn = mpmath.mpf(0), 1, q
    while True:
        term = n * qn / (1 - qn)
        total += term
        if abs(term) < eps:
            break
        n += 1
        qn *= q
    return 1 - 24 * total


def a2sq_numeric(tau):
    return 2 * e2_numeric(2 * tau) - e2_numeric(tau)


# -- Cayley coordinates --------------------------------------------------------

def cayley_point(tau_star, s):
    """tau(s) and j_s for s = (tau - tau_*)/(tau - conj(tau_*)) rescaled by D = tau_* - conj(tau_*)."""
    D = tau_star - mpmath.conj(tau_star)
    tau = (D * tau_star - s * mpmath.conj(tau_star)) / (D - s)
    j = 1 / (1 - s / D)
    return tau, j


def cayley_y(s, sbar, K):
    """Cayley image of the non-holomorphic Y: 2i (sbar/K^2) / (1 + s sbar/K^2)."""
    return 2j * (sbar / K**2) / (1 + s * sbar / K**2)


def cayley_y_limits(precision=50, s=None):
    """Holomorphic-limit values of the transformed Y at sbar -> 0 and sbar -> K."""
    with mpmath.workdps(precision):
        K = gamma_constants(3, precision)["K"]
        s = mpmath.mpc(0, "0.01") if s is None else mpmath.mpmathify(s)
        at_zero = abs(cayley_y(s, 0, K))
        at_k = abs(cayley_y(s, K, K) - 2j * (1 / K) / (1 + s / K))
        tol = _tolerance(precision)
        return [
            numeric_report("C(Y) at sbar = 0 vanishes", tol, at_zero),
            numeric_report("C(Y) at sbar = K equals 2i (1/K)/(1 + s/K)", tol, at_k),
        ]


# -- connection matrix ---------------------------------------------------------

def connection_matrix(precision=50):
    """Q with M_orb = Q diag(zeta3, zeta3^2) Q^-1 for the level-3 periods.

    Q^-1 = P diag(1/kappa, 1), where the rows of P are gamma_+- (1, e^(-pi i a)),
    (1, e^(-pi i b)): the continuation of the local periods to the large-volume ones.
    """
    c = gamma_constants(3, precision)
    with mpmath.workdps(precision + 10):
        a = c["a"]
        b = 1 - a
        gp, gm = c["gamma_plus"], c["gamma_minus"]
        p = mpmath.matrix([[gp, gp * mpmath.expjpi(-a)], [gm, gm * mpmath.expjpi(-b)]])
        scale = mpmath.diag([1 / c["kappa"], 1])
        q_inv = p * scale
        return mpmath.inverse(q_inv), q_inv


def connection_check(precision=50):
    with mpmath.workdps(precision + 10):
        q, q_inv = connection_matrix(precision)
        zeta3 = mpmath.expjpi(mpmath.mpf(2) / 3)
        local = mpmath.diag([zeta3, zeta3**2])
        m = q * local * q_inv
        err = max(abs(m[i, j] - M_ORB[i][j]) for i in range(2) for j in range(2))
        # mpmath.mpf keeps the report independent of the temporary precision
        err = mpmath.mpf(err)
    return numeric_report("Q diag(zeta3, zeta3^2) Q^-1 = M_orb", _tolerance(precision), err)


# -- rational constants ----------------------------------------------------------

def rational_constant_oracle(level, precision=50):
    """Two independent certificates for the scale k in v = k y F4/F3 (3 at level 3, 2 at level 2).

    Gamma route: -2 pi i K gamma_+ gamma_-.
    q route: lim 2 pi i M s / y(tau(s)) as s -> 0, with y = A/C evaluated from q-products.
    """
    d = level_data(level)
    target = d.scale
    c = gamma_constants(level, precision)
    tol = _tolerance(precision)
    reports = []
    with mpmath.workdps(precision + 10):
        value = -2j * mpmath.pi * c["K"] * c["gamma_plus"] * c["gamma_minus"]
        reports.append(numeric_report(f"-2 pi i K gamma_+ gamma_- = {target}", tol, abs(value - target)))
    # y(v) = v/k + O(v^3), so s must be small enough that the correction is beyond the tolerance
    exponent = precision // 2 + 6
    with mpmath.workdps(precision + exponent + 20):
        s = mpmath.mpc(0, mpmath.mpf(10) ** (-exponent))
        _, tau_star, _ = _base_point(level)
        tau, _ = cayley_point(tau_star, s)
        if level == 3:
            y = a3_numeric(tau) / c3_numeric(tau)
            m = c3_numeric(tau_star) ** 2
        else:
            y = a2sq_numeric(tau) / c2sq_numeric(tau)
            m = c2sq_numeric(tau_star)
        value = 2j * mpmath.pi * m * s / y
        err = mpmath.mpf(abs(value - target))
    reports.append(numeric_report(f"lim 2 pi i M s / y(tau(s)) = {target}", tol, err))
    with mpmath.workdps(precision + 10):
        if level == 3:
            base = c3_numeric(c["tau_star"])
            reports.append(numeric_report("C3(tau_*) = gamma_+ e^(pi i a)", tol, abs(base - c["base_value"])))
        reports.append(numeric_report("-K = tau_* - conj(tau_*)", tol, c["K_identity_error"]))
    return reports


# -- numeric continuation --------------------------------------------------------

_NUMERIC_FORMS = {"A3": ("A", a3_numeric), "B3": ("B", b3_numeric), "C3": ("C", c3_numeric)}


def _q_side(series, tau):
    """Evaluate a truncated q-expansion at tau, with q^(offset) = exp(2 pi i tau offset)."""
    offset = getattr(series, "offset", Fraction(0))
    body = getattr(series, "body", series)
    factor = mpmath.exp(2j * mpmath.pi * tau * (mpmath.mpf(offset.numerator) / offset.denominator))
    return factor * body.evaluate(_q(tau), mpmath)


def _tail(values, ratio, order):
    """Geometric tail estimate from the size of the last coefficients and the ratio |x|."""
    ratio = abs(ratio)
    if ratio >= 1:
        return mpmath.inf
    biggest = max((abs(c) for c in values[-5:]), default=0) or mpmath.mpf(1)
    return biggest * max(order, 1) ** 2 * ratio ** (order + 1) / (1 - ratio)


def numeric_continuation_check(form="C3", s=None, precision=50, order=40):
    """Compare j_s f(tau(s)) / C3(tau_*) with the elliptic v-series at v = 2 pi i M s."""
    if form not in _NUMERIC_FORMS:
        raise ValueError(f"continuation is only checked for the weight-one forms {sorted(_NUMERIC_FORMS)}")
    key, _ = _NUMERIC_FORMS[form]
    c = gamma_constants(3, precision)
    qseries = generators(3, order)[key].series
    vseries = cayley_expansions(3, order)[key].series
    with mpmath.workdps(precision + 10):
        s = mpmath.mpc(0, "0.01") if s is None else mpmath.mpmathify(s)
        tau, j = cayley_point(c["tau_star"], s)
        omega = c["base_value"]
        v = 2j * mpmath.pi * c["M"] * s
        lhs = j * _q_side(qseries, tau) / omega
        rhs = vseries.evaluate(v, mpmath)
        err = abs(lhs - rhs)
        q_coeffs = [mpmath.mpf(x.numerator) / x.denominator for x in getattr(qseries, "body", qseries).coeffs]
        v_coeffs = [abs(x.to_complex(mpmath)) if hasattr(x, "to_complex") else abs(mpmath.mpf(x.numerator) / x.denominator) for x in vseries.coeffs]
        tail = _tail(q_coeffs, _q(tau), order) * abs(j / omega) + _tail(v_coeffs, v, order)
        tol = 10 * (tail + _tolerance(precision))
        report = numeric_report(f"continuation of {form} at s = {mpmath.nstr(s, 3)}", tol, mpmath.mpf(err))
        report["digits"] = int(-mpmath.log10(err / abs(rhs))) if err else precision
    return report

