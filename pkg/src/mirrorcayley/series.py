"""Truncated formal power series with exact coefficients.

``PowerSeries`` holds coefficients 0..trunc in a named variable; every term of
degree above ``trunc`` is unknown, and no operation ever produces coefficients
past what its inputs determine.  ``FracSeries`` is x^offset times a
``PowerSeries`` with a rational offset, which is what eta quotients need.

Coefficients are ``fractions.Fraction`` or ``CycScalar``; floats are refused.
"""
from fractions import Fraction

from .cyclotomic import CycScalar

ZERO = Fraction(0)
ONE = Fraction(1)


class SeriesError(ValueError):
    pass


def scalar(x):
    if isinstance(x, (Fraction, CycScalar)):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"series coefficients must be exact, got {type(x).__name__}")


def _is_scalar(x):
    return isinstance(x, (int, Fraction, CycScalar)) and not isinstance(x, bool)


def fraction_pair(x):
    x = Fraction(x)
    return [x.numerator, x.denominator]


class PowerSeries:
    __slots__ = ("coeffs", "trunc", "variable")

    def __init__(self, coeffs, trunc=None, variable="x"):
        coeffs = [scalar(c) for c in coeffs]
        if trunc is None:
            trunc = len(coeffs) - 1
        if trunc < 0:
            raise SeriesError("truncation order must be nonnegative")
        coeffs = coeffs[: trunc + 1]
        coeffs += [ZERO] * (trunc + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.trunc = trunc
        self.variable = variable

    # -- construction -------------------------------------------------
    @classmethod
    def constant(cls, c, trunc, variable="x"):
        return cls([c], trunc, variable)

    @classmethod
    def monomial(cls, n, trunc, variable="x", c=1):
        coeffs = [ZERO] * (trunc + 1)
        if n <= trunc:
            coeffs[n] = scalar(c)
        return cls(coeffs, trunc, variable)

    @classmethod
    def gen(cls, trunc, variable="x"):
        """The series x itself."""
        return cls.monomial(1, trunc, variable)

    # -- access -------------------------------------------------------
    def __getitem__(self, n):
        if n < 0:
            return ZERO
        if n > self.trunc:
            raise IndexError(f"coefficient {n} is beyond truncation order {self.trunc}")
        return self.coeffs[n]

    def __len__(self):
        return self.trunc + 1

    def valuation(self):
        """Index of the first nonzero coefficient, or None if all known ones vanish."""
        return next((k for k, c in enumerate(self.coeffs) if c != 0), None)

    def truncate(self, trunc):
        if trunc > self.trunc:
            raise SeriesError(f"cannot extend truncation from {self.trunc} to {trunc}")
        return PowerSeries(self.coeffs[: trunc + 1], trunc, self.variable)

    def with_variable(self, variable):
        return PowerSeries(self.coeffs, self.trunc, variable)

    def map(self, fn):
        return PowerSeries([fn(c) for c in self.coeffs], self.trunc, self.variable)

    def to_rational(self):
        """Convert CycScalar coefficients that happen to be rational into Fractions."""
        return self.map(lambda c: c.to_rational() if isinstance(c, CycScalar) else c)

    # -- comparison ---------------------------------------------------
    def mismatch(self, other):
        """First index below the common truncation where the series differ, else None."""
        other = _as_series(other, self)
        for k in range(min(self.trunc, other.trunc) + 1):
            if self.coeffs[k] != other.coeffs[k]:
                return k
        return None

    def __eq__(self, other):
        if _is_scalar(other):
            other = PowerSeries.constant(other, self.trunc, self.variable)
        if isinstance(other, FracSeries):
            return other == self
        if not isinstance(other, PowerSeries) or other.variable != self.variable:
            return False
        return self.mismatch(other) is None

    __hash__ = None

    def is_zero(self):
        return self.valuation() is None

    # -- ring operations ----------------------------------------------
    def _check(self, other):
        if other.variable != self.variable:
            raise SeriesError(f"variable mismatch: {self.variable!r} vs {other.variable!r}")

    def __add__(self, other):
        if _is_scalar(other):
            c = list(self.coeffs)
            c[0] = c[0] + scalar(other)
            return PowerSeries(c, self.trunc, self.variable)
        if isinstance(other, FracSeries):
            return FracSeries.lift(self) + other
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check(other)
        t = min(self.trunc, other.trunc)
        return PowerSeries([a + b for a, b in zip(self.coeffs[: t + 1], other.coeffs)], t, self.variable)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.trunc, self.variable)

    def __sub__(self, other):
        if _is_scalar(other) or isinstance(other, (PowerSeries, FracSeries)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            other = scalar(other)
            return PowerSeries([c * other for c in self.coeffs], self.trunc, self.variable)
        if isinstance(other, FracSeries):
            return FracSeries.lift(self) * other
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check(other)
        t = min(self.trunc, other.trunc)
        out = [ZERO] * (t + 1)
        b = other.coeffs
        for i in range(t + 1):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(t + 1 - i):
                if b[j] != 0:
                    out[i + j] = out[i + j] + a * b[j]
        return PowerSeries(out, t, self.variable)

    __rmul__ = __mul__

    def inverse(self):
        c0 = self.coeffs[0]
        if c0 == 0:
            raise SeriesError("series with zero constant term is not invertible")
        inv0 = ONE / c0
        g = [inv0]
        for n in range(1, self.trunc + 1):
            acc = ZERO
            for k in range(1, n + 1):
                if self.coeffs[k] != 0:
                    acc = acc + self.coeffs[k] * g[n - k]
            g.append(-acc * inv0)
        return PowerSeries(g, self.trunc, self.variable)

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (ONE / scalar(other))
        if isinstance(other, FracSeries):
            return FracSeries.lift(self) / other
        if not isinstance(other, PowerSeries):
            return NotImplemented
        self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n):
        if isinstance(n, Fraction):
            if n.denominator == 1:
                n = int(n)
            else:
                return self.power(n)
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = PowerSeries.constant(1, self.trunc, self.variable)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- calculus -----------------------------------------------------
    def derive(self):
        if self.trunc == 0:
            raise SeriesError("derivative of a series known only to order 0 is undetermined")
        return PowerSeries([k * self.coeffs[k] for k in range(1, self.trunc + 1)], self.trunc - 1, self.variable)

    def theta(self):
        """x d/dx."""
        return PowerSeries([k * c for k, c in enumerate(self.coeffs)], self.trunc, self.variable)

    def integrate(self, c0=0):
        body = [scalar(c0)] + [c / (k + 1) for k, c in enumerate(self.coeffs)]
        return PowerSeries(body, self.trunc + 1, self.variable)

    def log(self):
        if self.coeffs[0] != 1:
            raise SeriesError("log needs constant term 1")
        if self.trunc == 0:
            return PowerSeries([0], 0, self.variable)
        return (self.derive() / self.truncate(self.trunc - 1)).integrate()

    def exp(self):
        if self.coeffs[0] != 0:
            raise SeriesError("exp needs constant term 0")
        g = [ONE]
        for n in range(1, self.trunc + 1):
            acc = ZERO
            for k in range(1, n + 1):
                if self.coeffs[k] != 0:
                    acc = acc + k * self.coeffs[k] * g[n - k]
            g.append(acc / n)
        return PowerSeries(g, self.trunc, self.variable)

    def power(self, p):
        """f**p for rational p, f(0) = 1, via the recurrence from f g' = p f' g."""
        p = Fraction(p)
        if self.coeffs[0] != 1:
            raise SeriesError("rational powers need constant term 1")
        f = self.coeffs
        g = [ONE]
        for k in range(1, self.trunc + 1):
            acc = ZERO
            for j in range(1, k + 1):
                if f[j] != 0:
                    acc = acc + ((p + 1) * j - k) * f[j] * g[k - j]
            g.append(acc / k)
        return PowerSeries(g, self.trunc, self.variable)

    def nth_root(self, n):
        if n < 1:
            raise SeriesError("root index must be positive")
        return self.power(Fraction(1, n))

    # -- substitution -------------------------------------------------
    def compose(self, inner):
        """self(inner(y)); inner must have zero constant term."""
        if not isinstance(inner, PowerSeries):
            raise TypeError("inner argument must be a PowerSeries")
        if inner.coeffs[0] != 0:
            raise SeriesError("composition needs an inner series with zero constant term")
        v = inner.valuation()
        v = inner.trunc + 1 if v is None else v
        t = min(inner.trunc, (self.trunc + 1) * v - 1)
        inner = inner.truncate(t)
        result = PowerSeries.constant(self.coeffs[self.trunc], t, inner.variable)
        for k in range(self.trunc - 1, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def reverse(self):
        """Compositional inverse g with self(g(x)) = x, by Newton iteration."""
        if self.coeffs[0] != 0:
            raise SeriesError("reversion needs zero constant term")
        if self.trunc < 1 or self.coeffs[1] == 0:
            raise SeriesError("reversion needs a nonzero linear coefficient")
        T = self.trunc
        g = PowerSeries([0, ONE / self.coeffs[1]], 1, self.variable)
        prec = 1
        while prec < T:
            prec = min(2 * prec + 1, T)
            f = self.truncate(prec)
            df = f.derive()
            x = PowerSeries.gen(prec, self.variable)
            g = PowerSeries(g.coeffs, prec, self.variable)
            residual = f.compose(g) - x
            v = residual.valuation()
            if v is None:
                continue
            # residual = x^v * r, so r / f'(g) is only needed to order prec - v
            r = PowerSeries(residual.coeffs[v:], prec - v, self.variable)
            slope = df.compose(g).truncate(prec - v)
            g = g - (r / slope).shift(v)
        return g.truncate(T)

    def scale_argument(self, c):
        """f(c*x)."""
        c = scalar(c)
        out, p = [], ONE
        for a in self.coeffs:
            out.append(a * p)
            p = p * c
        return PowerSeries(out, self.trunc, self.variable)

    def dilate(self, m):
        """f(x**m) as a series in x."""
        if m < 1:
            raise SeriesError("dilation factor must be positive")
        out = [ZERO] * (self.trunc * m + m)
        for k, a in enumerate(self.coeffs):
            out[k * m] = a
        return PowerSeries(out, self.trunc * m + m - 1, self.variable)

    def shift(self, k):
        """x**k * f for k >= 0."""
        if k < 0:
            raise SeriesError("use FracSeries for negative shifts")
        return PowerSeries([ZERO] * k + list(self.coeffs), self.trunc + k, self.variable)

    # -- evaluation and I/O -------------------------------------------
    def evaluate(self, x, mp=None):
        """Horner evaluation; mpmath coefficients when ``mp`` is given."""
        total = 0
        for a in reversed(self.coeffs):
            total = total * x + _numeric(a, mp)
        return total

    def to_json(self):
        return {
            "variable": self.variable,
            "trunc": self.trunc,
            "coeffs": [_coeff_json(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data):
        return cls([_coeff_from_json(c) for c in data["coeffs"]], data["trunc"], data["variable"])

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*{self.variable}")
            else:
                terms.append(f"{c}*{self.variable}^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O({self.variable}^{self.trunc + 1})"


def _as_series(other, like):
    if _is_scalar(other):
        return PowerSeries.constant(other, like.trunc, like.variable)
    if not isinstance(other, PowerSeries):
        raise TypeError(f"cannot compare PowerSeries with {type(other).__name__}")
    like._check(other)
    return other


def _numeric(a, mp):
    if isinstance(a, CycScalar):
        return a.to_complex(mp)
    if mp is None:
        return float(a)
    return mp.mpf(a.numerator) / a.denominator


def _coeff_json(c):
    if isinstance(c, CycScalar):
        if c.is_rational():
            return fraction_pair(c.to_rational())
        return {"cyclotomic": c.to_json()}
    return fraction_pair(c)


def _coeff_from_json(c):
    if isinstance(c, dict):
        return CycScalar.from_json(c["cyclotomic"])
    n, d = c
    return Fraction(n, d)


class FracSeries:
    """x**offset * body(x) with a rational offset."""

    __slots__ = ("offset", "body")

    def __init__(self, offset, body):
        if not isinstance(body, PowerSeries):
            raise TypeError("body must be a PowerSeries")
        self.offset = Fraction(offset)
        self.body = body

    @classmethod
    def lift(cls, series):
        if isinstance(series, FracSeries):
            return series
        return cls(0, series)

    @property
    def variable(self):
        return self.body.variable

    @property
    def trunc(self):
        """Largest exponent whose coefficient is known."""
        return self.offset + self.body.trunc

    def coefficient(self, exponent):
        k = Fraction(exponent) - self.offset
        if k.denominator != 1 or k < 0:
            if exponent > self.trunc:
                raise IndexError(f"exponent {exponent} is beyond truncation {self.trunc}")
            return ZERO
        return self.body[int(k)]

    def terms(self):
        """(exponent, coefficient) pairs for all nonzero known terms."""
        return [(self.offset + k, c) for k, c in enumerate(self.body.coeffs) if c != 0]

    def normalize(self):
        """Move leading zero coefficients into the offset."""
        v = self.body.valuation()
        if v is None or v == 0:
            return self
        return FracSeries(self.offset + v, PowerSeries(self.body.coeffs[v:], self.body.trunc - v, self.variable))

    def to_power_series(self):
        if self.offset.denominator != 1 or self.offset < 0:
            raise SeriesError(f"offset {self.offset} is not a nonnegative integer")
        return self.body.shift(int(self.offset))

    def truncate_to(self, exponent):
        """Keep terms up to the given absolute exponent."""
        t = Fraction(exponent) - self.offset
        return FracSeries(self.offset, self.body.truncate(int(t // 1)))

    def _align(self, other):
        diff = other.offset - self.offset
        if diff.denominator != 1:
            raise SeriesError(f"offsets {self.offset} and {other.offset} differ by a non-integer")
        if self.body.variable != other.body.variable:
            raise SeriesError("variable mismatch")
        low = min(self.offset, other.offset)
        top = min(self.trunc, other.trunc)
        if top < low:
            raise SeriesError("no overlap between the known ranges of the two series")
        t = int(top - low)

        def padded(s):
            k = int(s.offset - low)
            return PowerSeries([ZERO] * k + list(s.body.coeffs), t, s.variable)

        return low, padded(self), padded(other)

    def __add__(self, other):
        if _is_scalar(other):
            other = PowerSeries.constant(other, max(0, int(self.trunc // 1)), self.variable)
        if isinstance(other, PowerSeries):
            other = FracSeries.lift(other)
        if not isinstance(other, FracSeries):
            return NotImplemented
        low, a, b = self._align(other)
        return FracSeries(low, a + b)

    __radd__ = __add__

    def __neg__(self):
        return FracSeries(self.offset, -self.body)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return FracSeries(self.offset, self.body * other)
        if isinstance(other, PowerSeries):
            other = FracSeries.lift(other)
        if not isinstance(other, FracSeries):
            return NotImplemented
        return FracSeries(self.offset + other.offset, self.body * other.body)

    __rmul__ = __mul__

    def inverse(self):
        s = self.normalize()
        return FracSeries(-s.offset, s.body.inverse())

    def __truediv__(self, other):
        if _is_scalar(other):
            return FracSeries(self.offset, self.body / other)
        if isinstance(other, PowerSeries):
            other = FracSeries.lift(other)
        if not isinstance(other, FracSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return self.inverse() * other
        if isinstance(other, PowerSeries):
            return FracSeries.lift(other) * self.inverse()
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        return FracSeries(self.offset * n, self.body**n)

    def theta(self):
        """x d/dx, which multiplies x**e by e."""
        return FracSeries(self.offset, self.body * self.offset + self.body.theta())

    def log_derivative(self):
        """theta(f)/f as a plain power series (offset 0)."""
        s = self.normalize()
        return s.body.theta() / s.body + s.offset

    def mismatch(self, other):
        """First exponent where the two differ within the common known range, else None."""
        other = FracSeries.lift(other)
        low, a, b = self._align(other)
        k = a.mismatch(b)
        return None if k is None else low + k

    def is_zero(self):
        return self.body.is_zero()

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            other = FracSeries.lift(other)
        if not isinstance(other, FracSeries) or other.variable != self.variable:
            return False
        try:
            return self.mismatch(other) is None
        except SeriesError:
            return False

    __hash__ = None

    def evaluate(self, x, mp):
        """x**offset * body(x) with the principal branch of x**offset."""
        return mp.power(x, mp.mpf(self.offset.numerator) / self.offset.denominator) * self.body.evaluate(x, mp)

    def to_json(self):
        data = self.body.to_json()
        data["offset"] = fraction_pair(self.offset)
        return data

    @classmethod
    def from_json(cls, data):
        n, d = data.get("offset", (0, 1))
        return cls(Fraction(n, d), PowerSeries.from_json(data))

    def __repr__(self):
        return f"{self.variable}^({self.offset}) * ({self.body!r})"


def series_from_json(data):
    """Decode either series flavour; a missing or zero offset yields a PowerSeries."""
    s = FracSeries.from_json(data)
    if s.offset == 0:
        return s.body
    return s
