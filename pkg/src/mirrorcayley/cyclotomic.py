"""Exact arithmetic in the cyclotomic field Q(zeta_24).

Elements are stored as 8 rational coordinates in the power basis
1, z, ..., z^7 where z = exp(2*pi*i/24).  The minimal polynomial of z is
x^8 - x^4 + 1, so products are reduced with z^8 = z^4 - 1.
"""
from fractions import Fraction

DEGREE = 8


def _reduce(coeffs):
    # fold every z^k with k >= 8 back using z^8 = z^4 - 1
    c = list(coeffs)
    for k in range(len(c) - 1, DEGREE - 1, -1):
        top = c[k]
        if top:
            c[k - 4] += top
            c[k - 8] -= top
        c[k] = 0
    c = c[:DEGREE]
    return c + [Fraction(0)] * (DEGREE - len(c))


class CycScalar:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = ()
        coeffs = [Fraction(x) for x in coeffs]
        if len(coeffs) > DEGREE:
            coeffs = _reduce(coeffs)
        self.coeffs = tuple(coeffs + [Fraction(0)] * (DEGREE - len(coeffs)))

    @classmethod
    def rational(cls, x):
        return cls([x])

    @classmethod
    def zeta(cls, k=1):
        """z^k for any integer k (negative allowed)."""
        k %= 24
        # z^12 = -1, so reduce to 0 <= k < 12 with a sign
        sign = 1
        if k >= 12:
            k -= 12
            sign = -1
        c = [0] * 12
        c[k] = sign
        return cls(_reduce([Fraction(x) for x in c]))

    @staticmethod
    def _coerce(other):
        if isinstance(other, CycScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycScalar([-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prod = [Fraction(0)] * (2 * DEGREE - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycScalar(_reduce(prod))

    __rmul__ = __mul__

    def _matrix(self):
        # column j holds the coordinates of self * z^j
        cols = [(self * CycScalar.zeta(j)).coeffs for j in range(DEGREE)]
        return [[cols[j][i] for j in range(DEGREE)] for i in range(DEGREE)]

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_24)")
        from .linsolve import solve

        rhs = [Fraction(1)] + [Fraction(0)] * (DEGREE - 1)
        return CycScalar(solve(self._matrix(), rhs))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = CycScalar([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def conjugate(self):
        """Complex conjugation, z -> z^-1."""
        total = CycScalar()
        for k, a in enumerate(self.coeffs):
            if a:
                total = total + CycScalar.zeta(-k) * a
        return total

    def to_complex(self, mp=None):
        """Numerical value; uses mpmath at its working precision when given."""
        if mp is None:
            import cmath

            z = cmath.exp(2j * cmath.pi / 24)
            return sum(float(a) * z**k for k, a in enumerate(self.coeffs))
        z = mp.expjpi(mp.mpf(1) / 12)
        return mp.fsum(mp.mpf(a.numerator) / a.denominator * z**k for k, a in enumerate(self.coeffs))

    def to_json(self):
        return [[a.numerator, a.denominator] for a in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls([Fraction(n, d) for n, d in data])

    def __repr__(self):
        if self.is_rational():
            return f"CycScalar({self.coeffs[0]})"
        terms = [f"{a}*z^{k}" for k, a in enumerate(self.coeffs) if a]
        return "CycScalar(" + " + ".join(terms) + ")"


ZETA = CycScalar.zeta(1)
I = CycScalar.zeta(6)
SQRT2 = CycScalar.zeta(3) + CycScalar.zeta(-3)
SQRT3 = CycScalar.zeta(2) + CycScalar.zeta(-2)
OMEGA = CycScalar.zeta(8)


def exp_pi_i(r):
    """exp(pi*i*r) for rational r with 24*r/2 integral, i.e. r a multiple of 1/12."""
    r = Fraction(r)
    k = r * 12
    if k.denominator != 1:
        raise ValueError(f"exp(pi i * {r}) is outside Q(zeta_24)")
    return CycScalar.zeta(int(k))
