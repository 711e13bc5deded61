"""Machine-readable reports shared by every verification routine."""
from fractions import Fraction

from .series import FracSeries, SeriesError


def match_report(identity, lhs, rhs):
    """Compare two series and describe the first disagreement, if any."""
    lhs, rhs = FracSeries.lift(lhs), FracSeries.lift(rhs)
    try:
        first = lhs.mismatch(rhs)
    except SeriesError:
        # offsets in different classes: the leading terms already disagree
        first = min(lhs.normalize().offset, rhs.normalize().offset)
    top = min(lhs.trunc, rhs.trunc)
    report = {"identity": identity, "verified_to_order": _order_int(top), "first_mismatch": None}
    if first is not None:
        report["verified_to_order"] = _order_int(first) - 1 if Fraction(first).denominator == 1 else _order_int(first)
        report["first_mismatch"] = {
            "order": _exponent_json(first),
            "lhs": _coeff_str(lhs.coefficient(first)),
            "rhs": _coeff_str(rhs.coefficient(first)),
        }
    return report


def _order_int(x):
    return int(Fraction(x) // 1)


def _exponent_json(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def _coeff_str(c):
    return str(c)


def numeric_report(check, tolerance, max_error):
    """Report for a floating-point comparison; tolerance and error are kept as strings."""
    return {
        "check": check,
        "tolerance": _num_str(tolerance),
        "max_error": _num_str(max_error),
        "pass": bool(max_error <= tolerance),
    }


def _num_str(x):
    try:
        import mpmath

        return mpmath.nstr(x, 6)
    except (TypeError, ValueError):
        return str(x)


def all_pass(reports):
    """True when every match report has no mismatch and every numeric report passes."""
    ok = True
    for r in reports:
        if "first_mismatch" in r:
            ok = ok and r["first_mismatch"] is None
        else:
            ok = ok and r["pass"]
    return ok
