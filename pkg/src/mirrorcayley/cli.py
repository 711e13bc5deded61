"""Command-line interface: ``mirrorcayley expand | verify | cache``.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 internal error.
"""
import argparse
import json
import sys
from fractions import Fraction

from . import correspondence, fjrw, gw, monodromy, qforms
from .cache import SeriesCache, resolve_cache_dir
from .cayley import cayley_expansions
from .cyclotomic import CycScalar
from .reports import all_pass
from .series import FracSeries

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
SUITES = ("ramanujan", "wdvv", "correspondence", "monodromy", "prepotential", "all")


class UsageError(Exception):
    pass


# -- form registry --------------------------------------------------------------

def _gen(level, key):
    return lambda order: qforms.generators(level, order)[key].series


def _cay(level, key):
    return lambda order: cayley_expansions(level, order)[key].series


def _fjrw(case, name):
    def compute(order):
        table = fjrw.solve_wdvv(case, order)
        table.update(fjrw.derived_series(case, order))
        return table[name]

    return compute


def _gw(case, name):
    return lambda order: gw.gw_building_blocks(case, order)[name][0]


def build_registry():
    reg = {}
    for level, names in ((3, ("A3", "B3", "C3", "E3")), (2, ("A2sq", "B2sq", "C2sq", "E2gen"))):
        for key, name in zip("ABCE", names):
            reg[name] = _gen(level, key)
            reg["cayley:" + name] = _cay(level, key)
    reg["alpha3"] = lambda order: qforms.hauptmodul(3, order)
    reg["alpha2"] = lambda order: qforms.hauptmodul(2, order)
    for i in range(1, 7):
        reg[f"fjrw:cubic:f{i}"] = _fjrw("cubic", f"f{i}")
    for i in range(1, 5):
        reg[f"fjrw:pillow:f{i}"] = _fjrw("pillowcase", f"f{i}")
    for i in range(1, 7):
        reg[f"fjrw:pillow:g{i}"] = _fjrw("pillowcase", f"g{i}")
    reg["fjrw:cubic:genus1"] = lambda order: fjrw.fjrw_genus_one("cubic", order)
    for name in ("M1", "M2", "M3"):
        reg[f"gw:cubic:{name}"] = _gw("cubic", name)
    for name in ("X", "Y", "Z"):
        reg[f"gw:pillow:{name}"] = _gw("pillowcase", name)
    reg["gw:cubic:genus1"] = lambda order: gw.gw_genus_one("cubic", order)
    return reg


REGISTRY = build_registry()


# -- output -----------------------------------------------------------------------

def _terms(series):
    s = FracSeries.lift(series)
    for k, c in enumerate(s.body.coeffs):
        if c != 0:
            yield s.offset + k, c


def series_csv(series):
    lines = ["exponent,numerator,denominator"]
    for exponent, c in _terms(series):
        if isinstance(c, CycScalar):
            if not c.is_rational():
                raise UsageError("series has irrational coefficients; use --format json")
            c = c.to_rational()
        c = Fraction(c)
        lines.append(f"{exponent},{c.numerator},{c.denominator}")
    return "\n".join(lines)


def emit_series(name, order, series, fmt):
    if fmt == "json":
        data = {"name": name, "order": order}
        data.update(series.to_json())
        return json.dumps(data)
    if fmt == "csv":
        return series_csv(series)
    return f"{name} = {series!r}"


def emit_reports(suite, reports, fmt):
    ok = all_pass(reports)
    if fmt == "json":
        return json.dumps({"suite": suite, "pass": ok, "reports": reports}, default=str)
    if fmt == "csv":
        lines = ["name,pass,detail"]
        for r in reports:
            name, passed, detail = _report_row(r)
            lines.append(f"\"{name}\",{str(passed).lower()},\"{detail}\"")
        return "\n".join(lines)
    lines = []
    for r in reports:
        name, passed, detail = _report_row(r)
        lines.append(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
    lines.append(f"{suite}: {'pass' if ok else 'FAIL'} ({len(reports)} checks)")
    return "\n".join(lines)


def _report_row(r):
    if "identity" in r:
        fm = r["first_mismatch"]
        detail = f"verified to order {r['verified_to_order']}" if fm is None else (
            f"first mismatch at order {fm['order']}: {fm['lhs']} vs {fm['rhs']}")
        return r["identity"], fm is None, detail
    return r["check"], r["pass"], f"error {r['max_error']} (tolerance {r['tolerance']})"


# -- verification suites -------------------------------------------------------------

def _cases(case):
    return ("cubic", "pillowcase") if case is None else (case,)


def _levels(level):
    return (3, 2) if level is None else (level,)


def suite_reports(suite, args):
    order, den = args.order, args.e3_denominator
    reports = []
    if suite in ("ramanujan", "all"):
        for level in _levels(args.level):
            r = 3 if level == 3 else 4
            reports += qforms.verify_ramanujan(level, r, order, den if level == 3 else 4)
            reports.append(qforms.verify_hauptmodul(level, order))
    if suite in ("wdvv", "all"):
        for case in _cases(args.case):
            reports += fjrw.verify_wdvv(case, order)
    if suite in ("correspondence", "all"):
        for case in _cases(args.case):
            reports += correspondence.verify_correspondence(case, order, den)
    if suite in ("prepotential", "all"):
        for case in _cases(args.case):
            reports += correspondence.match_prepotential(case, order, den)
            if case == "cubic":
                reports.append(correspondence.match_genus_one(order, den))
    if suite in ("monodromy", "all"):
        p = args.precision
        exact = monodromy.monodromy_suite(3)
        for name, ok in exact["checks"].items():
            reports.append({"check": name, "tolerance": "0", "max_error": "0" if ok else "1", "pass": ok})
        reports.append(monodromy.reflection_check(p))
        reports.append(monodromy.connection_check(p))
        for level in (3, 2):
            reports += monodromy.rational_constant_oracle(level, p)
        for form in ("A3", "C3"):
            reports.append(monodromy.numeric_continuation_check(form, precision=p, order=40))
        reports += monodromy.cayley_y_limits(p)
    return reports


# -- argument parsing ---------------------------------------------------------------

def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _precision(text):
    value = int(text)
    if value < 30:
        raise argparse.ArgumentTypeError("precision must be at least 30 digits")
    return value


def _common(default):
    """Global flags, accepted before or after the subcommand."""
    p = argparse.ArgumentParser(add_help=False)
    kw = {} if default else {"default": argparse.SUPPRESS}
    p.add_argument("--order", type=_positive, **({"default": 30} if default else kw))
    p.add_argument("--precision", type=_precision, **({"default": 50} if default else kw))
    p.add_argument("--format", choices=("json", "csv", "pretty"), **({"default": "json"} if default else kw))
    p.add_argument("--cache-dir", **({"default": None} if default else kw))
    return p


def build_parser():
    parser = argparse.ArgumentParser(prog="mirrorcayley", parents=[_common(True)],
                                     description="Exact expansions and correspondence checks for elliptic orbifold curves.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common(False)

    p = sub.add_parser("expand", parents=[common], help="print the expansion of a named form")
    p.add_argument("form")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--case", choices=("cubic", "pillowcase"))
    p.add_argument("--level", type=int, choices=(2, 3))
    p.add_argument("--e3-denominator", type=int, default=4,
                   help="normalization of E3 = (3 E2(3 tau) + E2(tau))/d; other values are a negative control")

    p = sub.add_parser("cache", parents=[common], help="inspect or clear the series cache")
    p.add_argument("action", choices=("list", "clear"))
    return parser


def run(args, out):
    if args.command == "expand":
        if args.form not in REGISTRY:
            raise UsageError(f"unknown form {args.form!r}; known forms: {', '.join(sorted(REGISTRY))}")
        cache = SeriesCache(resolve_cache_dir(args.cache_dir))
        series = cache.get_or_compute(args.form, args.order, REGISTRY[args.form])
        out.write(emit_series(args.form, args.order, series, args.format) + "\n")
        return EXIT_OK
    if args.command == "verify":
        reports = suite_reports(args.suite, args)
        out.write(emit_reports(args.suite, reports, args.format) + "\n")
        return EXIT_OK if all_pass(reports) else EXIT_FAIL
    cache = SeriesCache(resolve_cache_dir(args.cache_dir))
    if args.action == "list":
        entries = cache.entries()
        if args.format == "json":
            out.write(json.dumps({"cache_dir": str(cache.directory), "entries": entries}) + "\n")
        else:
            for e in entries:
                out.write(f"{e['name']},{e['order']},{e['schema']}\n")
    else:
        out.write(json.dumps({"removed": cache.clear()}) + "\n")
    return EXIT_OK


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return run(args, sys.stdout)
    except UsageError as exc:
        print(f"mirrorcayley: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001 - any unexpected failure maps to the internal-error code
        print(f"mirrorcayley: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
