"""Sparse multivariate polynomials with coefficients in any exact ring.

Coefficients may be Fractions, CycScalars or whole series, which is how
prepotentials (polynomials in coordinates with series coefficients) and ODE
vector fields (polynomials in the unknowns) are both represented.
"""
from fractions import Fraction

from .series import FracSeries, PowerSeries


def _is_zero(c):
    if isinstance(c, (PowerSeries, FracSeries)):
        return c.is_zero()
    return c == 0


class Poly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        self.terms = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != len(self.variables):
                raise ValueError("exponent vector does not match the variable list")
            if not _is_zero(c):
                self.terms[exps] = c

    @classmethod
    def var(cls, variables, name):
        exps = tuple(1 if v == name else 0 for v in variables)
        if sum(exps) != 1:
            raise KeyError(name)
        return cls(variables, {exps: Fraction(1)})

    @classmethod
    def const(cls, variables, c):
        return cls(variables, {(0,) * len(variables): c})

    def gens(self):
        return [Poly.var(self.variables, v) for v in self.variables]

    def _lift(self, other):
        if isinstance(other, Poly):
            if other.variables != self.variables:
                raise ValueError("polynomials live in different variables")
            return other
        return Poly.const(self.variables, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return Poly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly(self.variables, {e: c * other for e, c in self.terms.items()})
        other = self._lift(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return Poly(self.variables, out)

    def __rmul__(self, other):
        return Poly(self.variables, {e: other * c for e, c in self.terms.items()})

    def __truediv__(self, scalar):
        return self * (Fraction(1) / scalar)

    def __pow__(self, n):
        result = Poly.const(self.variables, Fraction(1))
        for _ in range(n):
            result = result * self
        return result

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def map_coefficients(self, fn):
        return Poly(self.variables, {e: fn(c) for e, c in self.terms.items()})

    def evaluate(self, values, zero):
        """Substitute ring elements for the variables; ``zero`` seeds the sum."""
        total = zero
        for exps, c in self.terms.items():
            term = c
            for v, k in zip(values, exps):
                if k:
                    term = term * v**k
            total = total + term
        return total

    def substitute(self, new_variables, images):
        """Replace each variable by a polynomial in ``new_variables``."""
        images = [img if isinstance(img, Poly) else Poly.const(new_variables, img) for img in images]
        result = Poly(new_variables)
        powers = [{0: Poly.const(new_variables, Fraction(1))} for _ in images]
        for exps, c in self.terms.items():
            term = Poly.const(new_variables, Fraction(1))
            for i, k in enumerate(exps):
                if k:
                    if k not in powers[i]:
                        powers[i][k] = images[i] ** k
                    term = term * powers[i][k]
            result = result + term.map_coefficients(lambda x, c=c: c * x)
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly) or other.variables != self.variables:
            return False
        return (self - other).terms == {}

    __hash__ = None

    def __repr__(self):
        parts = []
        for exps, c in sorted(self.terms.items()):
            mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(self.variables, exps) if k)
            parts.append(f"({c!r})*{mono}" if mono else f"({c!r})")
        return " + ".join(parts) if parts else "0"


def prepotential_to_json(poly):
    """{"coordinates": [...], "monomials": [{"exponents": [...], "series": {...}}]}."""
    monomials = []
    for exps, c in sorted(poly.terms.items()):
        monomials.append({"exponents": list(exps), "series": c.to_json()})
    return {"coordinates": list(poly.variables), "monomials": monomials}


def prepotential_from_json(data):
    from .series import series_from_json

    terms = {tuple(m["exponents"]): series_from_json(m["series"]) for m in data["monomials"]}
    return Poly(data["coordinates"], terms)
