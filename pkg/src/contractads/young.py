"""Young generating series: symmetric-function valued series in z.

For a graphic function f,

    F_Y(f)(z) = sum_{l(lambda)>=2} f(K_lambda) m_lambda / lambda!
              + sum_{n>=1, lambda} f(K_{(1^n) u lambda}) m_lambda/lambda! z^n/n!

collects the values of f on all connected complete multipartite graphs.  The
series lives in Lambda_Q[[z]] truncated by total degree (z-degree plus
symmetric-function degree), which is the unique filtration making
substitution into the z slot well defined.

Composition in z turns the Schmitt product into functional composition when
the right factor is connected; for a right factor g with g(P_1) = c != 1 the
coloured-operad semantics also rescale the symmetric variables, which is what
:meth:`YoungSeries.scale_x` provides.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping

from .qpoly import QPoly, binomial_param
from .symfunc import (
    Partition,
    monomial_product,
    normalize_partition,
    partition_factorial,
    partitions_of,
)
from .graphs import multipartite_graph, path_graph
from .graphic_functions import GraphicFunction
from .series import arcsinh_coefficient

Key = tuple[int, Partition]


class YoungSeries:
    """Element of Lambda_Q[[z]] truncated at total degree `degree`.

    Terms map (n, lambda) to the raw coefficient of z^n m_lambda; the
    factorial normalisations live in the accessors.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Key, QPoly | int | Fraction] | None = None):
        if degree < 1:
            raise ValueError("degree bound must be >= 1")
        t: dict[Key, QPoly] = {}
        if terms:
            for (n, lam), c in terms.items():
                lam = normalize_partition(lam)
                if n < 0:
                    raise ValueError("negative z-exponent")
                if n + sum(lam) > degree:
                    continue
                coeff = c if isinstance(c, QPoly) else QPoly.const(c)
                if not coeff.is_zero():
                    t[(n, lam)] = coeff
        self.degree = degree
        self.terms = t

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> "YoungSeries":
        return cls(degree)

    @classmethod
    def z(cls, degree: int) -> "YoungSeries":
        return cls(degree, {(1, ()): QPoly.one()})

    @classmethod
    def constant(cls, degree: int, value) -> "YoungSeries":
        return cls(degree, {(0, ()): value})

    # -- inspection -----------------------------------------------------------

    def coefficient(self, n: int, lam) -> QPoly:
        return self.terms.get((n, normalize_partition(lam)), QPoly.zero())

    def graphic_value(self, n: int, lam) -> QPoly:
        """Recover f(K_{(1^n) u lambda}) from the stored coefficient."""
        lam = normalize_partition(lam)
        return self.coefficient(n, lam) * (factorial(n) * partition_factorial(lam))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, YoungSeries):
            return NotImplemented
        d = min(self.degree, other.degree)
        mine = {k: c for k, c in self.terms.items() if k[0] + sum(k[1]) <= d}
        theirs = {k: c for k, c in other.terms.items() if k[0] + sum(k[1]) <= d}
        return mine == theirs

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other: "YoungSeries") -> "YoungSeries":
        d = min(self.degree, other.degree)
        t: dict[Key, QPoly] = {}
        for src in (self.terms, other.terms):
            for k, c in src.items():
                if k[0] + sum(k[1]) > d:
                    continue
                s = t.get(k, QPoly.zero()) + c
                if s.is_zero():
                    t.pop(k, None)
                else:
                    t[k] = s
        out = YoungSeries.__new__(YoungSeries)
        out.degree, out.terms = d, t
        return out

    def __neg__(self) -> "YoungSeries":
        out = YoungSeries.__new__(YoungSeries)
        out.degree = self.degree
        out.terms = {k: -c for k, c in self.terms.items()}
        return out

    def __sub__(self, other: "YoungSeries") -> "YoungSeries":
        return self + (-other)

    def scale(self, value) -> "YoungSeries":
        c = value if isinstance(value, QPoly) else QPoly.const(value)
        return YoungSeries(self.degree, {k: c * v for k, v in self.terms.items()})

    def divexact(self, divisor) -> "YoungSeries":
        d = divisor if isinstance(divisor, QPoly) else QPoly.const(divisor)
        return YoungSeries(self.degree, {k: v.divexact(d) for k, v in self.terms.items()})

    def scale_x(self, value) -> "YoungSeries":
        """Substitute x_i -> value * x_i: each m_lambda picks up value^|lambda|."""
        c = value if isinstance(value, QPoly) else QPoly.const(value)
        return YoungSeries(
            self.degree, {(n, lam): (c ** sum(lam)) * v for (n, lam), v in self.terms.items()}
        )

    def __mul__(self, other: "YoungSeries") -> "YoungSeries":
        d = min(self.degree, other.degree)
        acc: dict[Key, QPoly] = {}
        for (n1, lam), a in self.terms.items():
            base1 = n1 + sum(lam)
            if base1 > d:
                continue
            for (n2, mu), b in other.terms.items():
                if base1 + n2 + sum(mu) > d:
                    continue
                ab = a * b
                n = n1 + n2
                for nu, c in monomial_product(lam, mu, d).items():
                    if n + sum(nu) > d:
                        continue
                    key = (n, nu)
                    s = acc.get(key, QPoly.zero()) + ab * c
                    if s.is_zero():
                        acc.pop(key, None)
                    else:
                        acc[key] = s
        out = YoungSeries.__new__(YoungSeries)
        out.degree, out.terms = d, acc
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (n, lam) in sorted(self.terms, key=lambda k: (k[0] + sum(k[1]), k[0], k[1])):
            c = self.terms[(n, lam)]
            mono = []
            if n:
                mono.append("z" if n == 1 else f"z^{n}")
            if lam:
                mono.append("m" + str(tuple(lam)).replace(" ", ""))
            parts.append(f"({c})*{'*'.join(mono) if mono else '1'}")
        return " + ".join(parts)

    __repr__ = __str__


# -- assembly from a graphic function ------------------------------------------


def young_of_graphic(f: GraphicFunction, degree: int) -> YoungSeries:
    """Assemble F_Y(f) by evaluating f on the connected complete multipartite
    graphs with at most `degree` vertices."""
    terms: dict[Key, QPoly] = {}
    for n in range(0, degree + 1):
        for total in range(0, degree - n + 1):
            for lam in partitions_of(total):
                if n == 0 and len(lam) < 2:
                    continue  # K_(m) is disconnected, K_() is empty
                parts = tuple(sorted(lam + (1,) * n, reverse=True))
                value = f(multipartite_graph(parts))
                if not isinstance(value, QPoly):
                    value = QPoly.const(value)
                weight = Fraction(1, factorial(n) * partition_factorial(lam))
                terms[(n, lam)] = value * weight
    return YoungSeries(degree, terms)


# -- composition and reversion ----------------------------------------------------


def young_compose(f: YoungSeries, g: YoungSeries) -> YoungSeries:
    """Substitute g for z in f; g must have no pure-constant term."""
    if not g.coefficient(0, ()).is_zero():
        raise ValueError("composition requires zero constant term in the inner series")
    d = min(f.degree, g.degree)
    powers = [YoungSeries.constant(d, 1)]
    for _ in range(d):
        powers.append(powers[-1] * g)
    acc = YoungSeries.zero(d)
    for (n, lam), c in f.terms.items():
        if n + sum(lam) > d:
            continue
        term = powers[n].scale(c) * YoungSeries(d, {(0, lam): 1})
        acc = acc + term
    return acc


def young_reverse(f: YoungSeries) -> YoungSeries:
    """Compositional inverse in z of f = z + (total degree >= 2); verified."""
    z = YoungSeries.z(f.degree)
    linear = {k: c for k, c in f.terms.items() if k[0] + sum(k[1]) == 1}
    if linear != {(1, ()): QPoly.one()}:
        raise ValueError("reversion requires the degree-1 part to be exactly z")
    higher = f - z
    g = z
    for _ in range(f.degree):
        g = z - young_compose(higher, g)
    if young_compose(f, g) != z or young_compose(g, f) != z:
        raise AssertionError("internal Young reversion check failed")
    return g


# -- transcendental expansions ------------------------------------------------------


def _young_powers(f: YoungSeries, kmax: int) -> list[YoungSeries]:
    out = [YoungSeries.constant(f.degree, 1)]
    for _ in range(kmax):
        out.append(out[-1] * f)
    return out


def _require_no_constant(f: YoungSeries, what: str):
    if not f.coefficient(0, ()).is_zero():
        raise ValueError(f"{what} requires zero constant term")


def young_exp(f: YoungSeries) -> YoungSeries:
    _require_no_constant(f, "exp")
    pw = _young_powers(f, f.degree)
    acc = YoungSeries.zero(f.degree)
    for k in range(f.degree + 1):
        acc = acc + pw[k].scale(Fraction(1, factorial(k)))
    return acc


def young_log1p(f: YoungSeries) -> YoungSeries:
    _require_no_constant(f, "log1p")
    pw = _young_powers(f, f.degree)
    acc = YoungSeries.zero(f.degree)
    for k in range(1, f.degree + 1):
        acc = acc + pw[k].scale(Fraction((-1) ** (k - 1), k))
    return acc


def young_pow_param(f: YoungSeries, alpha) -> YoungSeries:
    """(1 + f)**alpha with a parametric exponent."""
    _require_no_constant(f, "pow_param")
    pw = _young_powers(f, f.degree)
    acc = YoungSeries.zero(f.degree)
    for k in range(f.degree + 1):
        acc = acc + pw[k].scale(binomial_param(alpha, k))
    return acc


def young_scaled_arcsinh(f: YoungSeries) -> YoungSeries:
    """(1/sqrt(q)) arcsinh(sqrt(q) f) = sum_k c_k q^k f^(2k+1); stays in Q[q]."""
    _require_no_constant(f, "scaled_arcsinh")
    pw = _young_powers(f, f.degree)
    acc = YoungSeries.zero(f.degree)
    for k in range(0, (f.degree - 1) // 2 + 1):
        acc = acc + pw[2 * k + 1].scale(QPoly.q(k) * arcsinh_coefficient(k))
    return acc


# -- closed forms -----------------------------------------------------------------


def power_sum_exp_tail(degree: int) -> YoungSeries:
    """sum_{n>=1} p_n / n! up to the degree bound."""
    return YoungSeries(
        degree, {(0, (n,)): Fraction(1, factorial(n)) for n in range(1, degree + 1)}
    )


def sinh_tail(degree: int) -> YoungSeries:
    """SINH_q = sum_{n>=0} p_{2n+1} q^n / (2n+1)!."""
    return YoungSeries(
        degree,
        {
            (0, (2 * k + 1,)): QPoly.q(k) * Fraction(1, factorial(2 * k + 1))
            for k in range(0, (degree - 1) // 2 + 1)
        },
    )


def young_closed_form(target: str, degree: int) -> YoungSeries:
    """Closed forms over complete multipartite graphs.

    chromatic:          (1 + z + sum p_n/n!)^q - 1 - sum p_n q^n/n!
    modular_complex_G:  q/(q-1) z - 1/(q(q-1)) [same bracket]; the
                        compositional inverse in z of F_Y of the complex
                        wonderful series
    modular_real:       exp((1/sqrt q) arcsinh(sqrt q (z + SINH_q)))
                        - 1 - sum p_n/n!
    """
    target = target.lower()
    q = QPoly.q()
    if target == "chromatic":
        base = young_pow_param(YoungSeries.z(degree) + power_sum_exp_tail(degree), q)
        correction = YoungSeries(
            degree,
            {(0, (n,)): QPoly.q(n) * Fraction(1, factorial(n)) for n in range(1, degree + 1)},
        )
        return base - YoungSeries.constant(degree, 1) - correction
    if target == "modular_complex_g":
        chrom = young_closed_form("chromatic", degree)
        numerator = YoungSeries.z(degree).scale(q * q) - chrom
        return numerator.divexact(q * (q - QPoly.one()))
    if target == "modular_real":
        f = YoungSeries.z(degree) + sinh_tail(degree)
        return (
            young_exp(young_scaled_arcsinh(f))
            - YoungSeries.constant(degree, 1)
            - power_sum_exp_tail(degree)
        )
    raise ValueError(f"unknown target {target!r}")


# -- two-colour specialisation -----------------------------------------------------


class BiSeries:
    """Series in (t, z) truncated by total degree; values QPoly.

    This is the x_1 = t, x_2 = x_3 = ... = 0 specialisation target: only
    m_(m) = p_m survive, as t^m.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[tuple[int, int], QPoly | int | Fraction] | None = None):
        t: dict[tuple[int, int], QPoly] = {}
        if terms:
            for (i, j), c in terms.items():
                if i + j > degree:
                    continue
                coeff = c if isinstance(c, QPoly) else QPoly.const(c)
                if not coeff.is_zero():
                    t[(i, j)] = coeff
        self.degree = degree
        self.terms = t

    @classmethod
    def z(cls, degree: int) -> "BiSeries":
        return cls(degree, {(0, 1): QPoly.one()})

    def coefficient(self, t_exp: int, z_exp: int) -> QPoly:
        return self.terms.get((t_exp, z_exp), QPoly.zero())

    def __eq__(self, other):
        if not isinstance(other, BiSeries):
            return NotImplemented
        d = min(self.degree, other.degree)
        mine = {k: c for k, c in self.terms.items() if k[0] + k[1] <= d}
        theirs = {k: c for k, c in other.terms.items() if k[0] + k[1] <= d}
        return mine == theirs

    def __add__(self, other: "BiSeries") -> "BiSeries":
        d = min(self.degree, other.degree)
        t = dict()
        for src in (self.terms, other.terms):
            for k, c in src.items():
                s = t.get(k, QPoly.zero()) + c
                if s.is_zero():
                    t.pop(k, None)
                else:
                    t[k] = s
        return BiSeries(d, t)

    def __neg__(self) -> "BiSeries":
        return BiSeries(self.degree, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def scale(self, value) -> "BiSeries":
        c = value if isinstance(value, QPoly) else QPoly.const(value)
        return BiSeries(self.degree, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "BiSeries") -> "BiSeries":
        d = min(self.degree, other.degree)
        acc: dict[tuple[int, int], QPoly] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                i, j = i1 + i2, j1 + j2
                if i + j > d:
                    continue
                s = acc.get((i, j), QPoly.zero()) + a * b
                if s.is_zero():
                    acc.pop((i, j), None)
                else:
                    acc[(i, j)] = s
        return BiSeries(d, acc)

    def compose_z(self, inner: "BiSeries") -> "BiSeries":
        """Substitute inner for z."""
        if not inner.coefficient(0, 0).is_zero():
            raise ValueError("inner series needs zero constant term")
        d = min(self.degree, inner.degree)
        powers = [BiSeries(d, {(0, 0): QPoly.one()})]
        for _ in range(d):
            powers.append(powers[-1] * inner)
        acc = BiSeries(d)
        for (i, j), c in self.terms.items():
            if i + j > d:
                continue
            acc = acc + powers[j].scale(c) * BiSeries(d, {(i, 0): QPoly.one()})
        return acc

    def reverse_z(self) -> "BiSeries":
        """Compositional inverse in z; requires degree-1 part exactly z."""
        linear = {k: c for k, c in self.terms.items() if k[0] + k[1] == 1}
        if linear != {(0, 1): QPoly.one()}:
            raise ValueError("reversion in z requires the degree-1 part to be exactly z")
        z = BiSeries.z(self.degree)
        higher = self - z
        g = z
        for _ in range(self.degree):
            g = z - higher.compose_z(g)
        if self.compose_z(g) != z or g.compose_z(self) != z:
            raise AssertionError("internal bivariate reversion check failed")
        return g


def two_color_specialize(f: YoungSeries) -> BiSeries:
    """x_1 = t, all other variables 0: m_lambda -> t^|lambda| for l(lambda) <= 1."""
    terms: dict[tuple[int, int], QPoly] = {}
    for (n, lam), c in f.terms.items():
        if len(lam) <= 1:
            m = lam[0] if lam else 0
            terms[(m, n)] = c
    return BiSeries(f.degree, terms)
