"""Truncated univariate power series with QPoly coefficients.

A series carries its variable tag ('t' or 'z') and truncation order N; the
coefficient array always has length N+1.  Binary operations take the minimum
of the two orders, so precision loss is explicit and monotone.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .qpoly import QPoly, Scalar, binomial_param


def _coeff(value) -> QPoly:
    if isinstance(value, QPoly):
        return value
    return QPoly.const(value)


class PowerSeries:
    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var: str, order: int, coeffs: Sequence[QPoly | Scalar]):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = [_coeff(c) for c in coeffs]
        if len(cs) != order + 1:
            raise ValueError(f"need exactly {order + 1} coefficients, got {len(cs)}")
        self.var = var
        self.order = order
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zeros(cls, var: str, order: int) -> "PowerSeries":
        return cls(var, order, [QPoly.zero()] * (order + 1))

    @classmethod
    def constant(cls, var: str, order: int, value) -> "PowerSeries":
        coeffs = [QPoly.zero()] * (order + 1)
        coeffs[0] = _coeff(value)
        return cls(var, order, coeffs)

    @classmethod
    def identity(cls, var: str, order: int) -> "PowerSeries":
        """The series t (or z)."""
        coeffs = [QPoly.zero()] * (order + 1)
        if order >= 1:
            coeffs[1] = QPoly.one()
        return cls(var, order, coeffs)

    @classmethod
    def from_terms(cls, var: str, order: int, terms: dict[int, QPoly | Scalar]) -> "PowerSeries":
        coeffs = [QPoly.zero()] * (order + 1)
        for n, c in terms.items():
            if 0 <= n <= order:
                coeffs[n] = _coeff(c)
        return cls(var, order, coeffs)

    # -- inspection --------------------------------------------------------

    def coefficient(self, n: int) -> QPoly:
        if n > self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "PowerSeries":
        if order >= self.order:
            return self
        return PowerSeries(self.var, order, self.coeffs[: order + 1])

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.var == other.var and self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __hash__(self):
        return hash((self.var, self.order, self.coeffs))

    def _check_var(self, other: "PowerSeries"):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        self._check_var(other)
        n = min(self.order, other.order)
        return PowerSeries(self.var, n, [self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        self._check_var(other)
        n = min(self.order, other.order)
        return PowerSeries(self.var, n, [self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(self.var, self.order, [-c for c in self.coeffs])

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        self._check_var(other)
        n = min(self.order, other.order)
        out = [QPoly.zero()] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return PowerSeries(self.var, n, out)

    def scale(self, value) -> "PowerSeries":
        c = _coeff(value)
        return PowerSeries(self.var, self.order, [c * a for a in self.coeffs])

    def divexact_scalar(self, divisor) -> "PowerSeries":
        d = _coeff(divisor)
        return PowerSeries(self.var, self.order, [a.divexact(d) for a in self.coeffs])

    def shift_down(self) -> "PowerSeries":
        """Divide by the variable; requires zero constant term."""
        if not self.coeffs[0].is_zero():
            raise ValueError("cannot divide by the variable: nonzero constant term")
        return PowerSeries(self.var, self.order - 1, self.coeffs[1:])

    def invert_unit(self) -> "PowerSeries":
        """Multiplicative inverse; constant term must be a nonzero rational."""
        a0 = self.coeffs[0].as_fraction()
        if a0 == 0:
            raise ValueError("series has no inverse: zero constant term")
        inv0 = Fraction(1) / a0
        out = [QPoly.zero()] * (self.order + 1)
        out[0] = QPoly.const(inv0)
        for m in range(1, self.order + 1):
            s = QPoly.zero()
            for k in range(1, m + 1):
                if not self.coeffs[k].is_zero():
                    s = s + self.coeffs[k] * out[m - k]
            out[m] = (-s) * inv0
        return PowerSeries(self.var, self.order, out)

    def substitute_q(self, value: Scalar) -> list[Fraction]:
        """Evaluate every coefficient at q = value."""
        return [c.substitute(value) for c in self.coeffs]

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "1" if n == 0 else (self.var if n == 1 else f"{self.var}^{n}")
            parts.append(f"({c})*{mono}" if n else f"({c})")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O({self.var}^{self.order + 1})"

    __repr__ = __str__


# -- composition and reversion ----------------------------------------------


def series_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """f(g) truncated at min(order(f), order(g)); g must have g(0) = 0."""
    if not g.coeffs[0].is_zero():
        raise ValueError("composition requires the inner series to have zero constant term")
    n = min(f.order, g.order)
    g = g.truncate(n)
    # Horner evaluation keeps every intermediate truncated at order n.
    result = PowerSeries.constant(g.var, n, f.coeffs[n])
    for i in range(n - 1, -1, -1):
        result = result * g + PowerSeries.constant(g.var, n, f.coeffs[i])
    return result


def series_reverse(f: PowerSeries) -> PowerSeries:
    """Compositional inverse of f = t + O(t^2); verified on both sides."""
    if not f.coeffs[0].is_zero():
        raise ValueError("reversion requires zero constant term")
    if f.order < 1 or f.coeffs[1] != QPoly.one():
        raise ValueError("reversion requires linear coefficient exactly 1; normalise first")
    n = f.order
    t = PowerSeries.identity(f.var, n)
    higher = f - t
    g = t
    for _ in range(n):
        g = t - series_compose(higher, g)
    ident = PowerSeries.identity(f.var, n)
    if series_compose(f, g) != ident or series_compose(g, f) != ident:
        raise AssertionError("internal reversion check failed")
    return g


# -- transcendental expansions ------------------------------------------------


def _powers(f: PowerSeries, kmax: int) -> list[PowerSeries]:
    out = [PowerSeries.constant(f.var, f.order, 1)]
    for _ in range(kmax):
        out.append(out[-1] * f)
    return out


def exp_series(f: PowerSeries) -> PowerSeries:
    """exp(f) for f with zero constant term."""
    if not f.coeffs[0].is_zero():
        raise ValueError("exp requires zero constant term")
    pw = _powers(f, f.order)
    acc = PowerSeries.zeros(f.var, f.order)
    for k in range(f.order + 1):
        acc = acc + pw[k].scale(Fraction(1, factorial(k)))
    return acc


def log1p_series(f: PowerSeries) -> PowerSeries:
    """log(1 + f) for f with zero constant term."""
    if not f.coeffs[0].is_zero():
        raise ValueError("log1p requires zero constant term")
    pw = _powers(f, f.order)
    acc = PowerSeries.zeros(f.var, f.order)
    for k in range(1, f.order + 1):
        acc = acc + pw[k].scale(Fraction((-1) ** (k - 1), k))
    return acc


def pow_param_series(f: PowerSeries, alpha) -> PowerSeries:
    """(1 + f)**alpha via the parametric binomial series; alpha may be a QPoly."""
    if not f.coeffs[0].is_zero():
        raise ValueError("pow_param requires zero constant term")
    pw = _powers(f, f.order)
    acc = PowerSeries.zeros(f.var, f.order)
    for k in range(f.order + 1):
        acc = acc + pw[k].scale(binomial_param(alpha, k))
    return acc


def arcsinh_coefficient(k: int) -> Fraction:
    """Taylor coefficient of x^(2k+1) in arcsinh(x)."""
    return Fraction((-1) ** k * factorial(2 * k), 4**k * factorial(k) ** 2 * (2 * k + 1))


def scaled_arcsinh_series(f: PowerSeries) -> PowerSeries:
    """(1/sqrt(q)) * arcsinh(sqrt(q) * f) as sum_k c_k q^k f^(2k+1).

    Only even powers of sqrt(q) appear, so coefficients stay in Q[q].
    """
    if not f.coeffs[0].is_zero():
        raise ValueError("scaled_arcsinh requires zero constant term")
    pw = _powers(f, f.order)
    acc = PowerSeries.zeros(f.var, f.order)
    for k in range(0, (f.order - 1) // 2 + 1):
        acc = acc + pw[2 * k + 1].scale(QPoly.q(k) * arcsinh_coefficient(k))
    return acc


def series_transcendental(kind: str, f: PowerSeries, alpha=None) -> PowerSeries:
    """Dispatcher over {exp, log1p, pow_param, scaled_arcsinh}."""
    if kind == "exp":
        return exp_series(f)
    if kind == "log1p":
        return log1p_series(f)
    if kind == "pow_param":
        if alpha is None:
            raise ValueError("pow_param needs an exponent")
        return pow_param_series(f, alpha)
    if kind == "scaled_arcsinh":
        return scaled_arcsinh_series(f)
    raise ValueError(f"unknown transcendental kind {kind!r}")
