"""The convolution algebra of graphic functions.

A graphic function assigns a ring element to every connected graph,
invariantly under relabelling.  The Schmitt product

    (f * g)(G) = sum over graph partitions I of f(G/I) * prod_{B in I} g(G|_B)

makes these functions an associative monoid with unit eps (1 on the one-vertex
graph, 0 elsewhere).  This module provides the product, star-inversion, and
the named functions used throughout: 1, 1_q, mu, the chromatic function, and
the Hilbert series of the little-disks, wonderful (complex and real), gravity
and hypercommutative contractads.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Callable

from .qpoly import QPoly
from .graphs import (
    Graph,
    canonical_key,
    contract,
    graph_partitions,
    induced_subgraph,
    chromatic_polynomial,
    path_graph,
    _mask_to_set,
    graph_partition_masks,
)

_MEMO_CAP_ENV = "CONTRACTADS_MEMO_CAP"


def _memo_cap() -> int | None:
    raw = os.environ.get(_MEMO_CAP_ENV)
    if raw is None:
        return None
    try:
        return max(0, int(raw))
    except ValueError:
        return None


class GraphicFunction:
    """Memoised isomorphism-invariant map from connected graphs to a ring.

    Values may be ints, Fractions, QPoly, or symmetric functions; anything
    with ring arithmetic works.  The memo is keyed by canonical form, so
    isomorphic graphs are computed once.  Inserts are idempotent (values are
    deterministic), which is all the concurrency story this needs.
    """

    def __init__(self, name: str, evaluate: Callable[[Graph], object]):
        self.name = name
        self._evaluate = evaluate
        self._memo: dict = {}

    def __call__(self, g: Graph):
        if not g.is_connected():
            raise ValueError(f"graphic function {self.name} needs a connected graph")
        key = canonical_key(g)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        value = self._evaluate(g)
        cap = _memo_cap()
        if cap is None or len(self._memo) < cap:
            self._memo[key] = value
        return value

    def __repr__(self):
        return f"GraphicFunction({self.name})"

    # pointwise ring structure -------------------------------------------------

    def __add__(self, other: "GraphicFunction") -> "GraphicFunction":
        return GraphicFunction(f"({self.name}+{other.name})", lambda g: self(g) + other(g))

    def __sub__(self, other: "GraphicFunction") -> "GraphicFunction":
        return GraphicFunction(f"({self.name}-{other.name})", lambda g: self(g) - other(g))

    def __mul__(self, other: "GraphicFunction") -> "GraphicFunction":
        """Pointwise (Hadamard) product f . g."""
        return GraphicFunction(f"({self.name}.{other.name})", lambda g: self(g) * other(g))

    def scale(self, value) -> "GraphicFunction":
        return GraphicFunction(f"({value})*{self.name}", lambda g: value * self(g))

    def star(self, other: "GraphicFunction") -> "GraphicFunction":
        return convolve(self, other)


def convolve(f: GraphicFunction, g: GraphicFunction) -> GraphicFunction:
    """Schmitt product f * g."""

    def evaluate(graph: Graph):
        total = None
        for blocks in graph_partitions(graph):
            term = f(contract(graph, blocks))
            for block in blocks:
                term = term * g(induced_subgraph(graph, block))
            total = term if total is None else total + term
        return total

    return GraphicFunction(f"({f.name}*{g.name})", evaluate)


def star_inverse(f: GraphicFunction) -> GraphicFunction:
    """Two-sided inverse of f under *; requires f(P_1) = 1.

    Solves (f * g)(G) = 0 for G with >= 2 vertices:
        g(G) = -f(G) - sum over proper non-extreme partitions I of
               f(G/I) * prod g(G|_B).
    """
    if f(path_graph(1)) != 1:
        raise ValueError("star inverse needs f(P_1) = 1")

    inverse = GraphicFunction(f"starinv({f.name})", lambda g: None)

    def evaluate(graph: Graph):
        if graph.n == 1:
            return 1
        acc = -f(graph)
        for blocks in graph_partitions(graph):
            if len(blocks) == 1 or len(blocks) == graph.n:
                continue
            term = f(contract(graph, blocks))
            for block in blocks:
                term = term * inverse(induced_subgraph(graph, block))
            acc = acc - term
        return acc

    inverse._evaluate = evaluate
    return inverse


# -- named graphic functions -------------------------------------------------------


def unit_gf() -> GraphicFunction:
    """eps: 1 on the one-vertex graph, 0 elsewhere."""
    return GraphicFunction("eps", lambda g: 1 if g.n == 1 else 0)


def one_gf() -> GraphicFunction:
    return GraphicFunction("1", lambda g: 1)


def one_param_gf(value) -> GraphicFunction:
    """1_x: graph on n vertices maps to x**(n-1)."""
    return GraphicFunction(f"1_({value})", lambda g: _coerce_power(value, g.n - 1))


def _coerce_power(value, exponent: int):
    if isinstance(value, QPoly):
        return value**exponent
    return Fraction(value) ** exponent


def one_q_gf() -> GraphicFunction:
    """1_q, the weight-graded dimension of the one-dimensional contractad."""
    return one_param_gf(QPoly.q())


def one_q_odd_gf() -> GraphicFunction:
    """sqrt(q)^(n-1) on graphs with an odd number of vertices, else 0."""

    def evaluate(g: Graph):
        if g.n % 2 == 0:
            return QPoly.zero()
        return QPoly.q((g.n - 1) // 2)

    return GraphicFunction("1_q^odd", evaluate)


_shared: dict[str, GraphicFunction] = {}


def _get(name: str, build: Callable[[], GraphicFunction]) -> GraphicFunction:
    fn = _shared.get(name)
    if fn is None:
        fn = build()
        _shared[name] = fn
    return fn


def mobius_gf() -> GraphicFunction:
    """mu, the *-inverse of the constant function 1."""
    return _get("mu", lambda: star_inverse(_get("one", one_gf)))


def chromatic_gf() -> GraphicFunction:
    """The chromatic polynomial as q * (1_q * mu); cross-checked against
    deletion-contraction on every evaluation."""

    def build():
        base = convolve(one_q_gf(), mobius_gf())

        def evaluate(g: Graph):
            value = QPoly.q() * base(g)
            assert value == chromatic_polynomial(g), (
                f"contractad chromatic disagrees with deletion-contraction on {g!r}"
            )
            return value

        return GraphicFunction("X(q)", evaluate)

    return _get("chromatic", build)


def gerst_hilbert_gf() -> GraphicFunction:
    """Homology Hilbert series of the little-disks contractad, in the
    convention where the value equals q^n * chi_G(1/q).

    Computed as 1 * (1_q . mu); the chromatic identity is asserted on every
    evaluation.  The total dimension is the value at q = -1.
    """

    def build():
        base = convolve(one_gf(), one_q_gf() * mobius_gf())

        def evaluate(g: Graph):
            value = base(g)
            if not isinstance(value, QPoly):
                value = QPoly.const(value)
            chrom = chromatic_polynomial(g)
            assert value == chrom.reversed_q(g.n), (
                f"little-disks Hilbert series is not the reversed chromatic polynomial on {g!r}"
            )
            return value

        return GraphicFunction("gerst", evaluate)

    return _get("gerst", build)


def gerst_total_dim(g: Graph) -> int:
    """Total dimension of the little-disks homology: the Hilbert value at the
    point where every homological degree counts +1, i.e. q -> -1."""
    value = gerst_hilbert_gf()(g).substitute(-1)
    if value.denominator != 1 or value < 0:
        raise AssertionError(f"total dimension must be a non-negative integer, got {value}")
    return int(value)


def _complex_block_factor(size: int) -> QPoly:
    """(q - q^(size-1)) / (q - 1), tabulated as an explicit polynomial."""
    if size == 1:
        return QPoly.one()
    if size == 2:
        return QPoly.zero()
    # -q * (1 + q + ... + q^(size-3))
    return QPoly({2 * (k + 1): -1 for k in range(size - 2)})


def wonderful_complex_gf() -> GraphicFunction:
    """Poincare polynomial sum_i dim H^{2i} q^i of the complex wonderful
    compactification, via the convolution recurrence

        sum over partitions I of value(G/I) * prod (q - q^{|B|-1})/(q-1) = 1,

    with value(P_1) = 1.  Partitions containing a 2-block contribute nothing.
    Every value is asserted palindromic of degree n - 2 (Poincare duality).
    """

    def build():
        fn = GraphicFunction("wonderful_C", lambda g: None)

        def evaluate(g: Graph):
            if g.n == 1:
                return QPoly.one()
            acc = QPoly.one()
            for blocks in graph_partition_masks(g):
                if len(blocks) == g.n:
                    continue  # all singletons carries the unknown
                factor = QPoly.one()
                for b in blocks:
                    size = bin(b).count("1")
                    factor = factor * _complex_block_factor(size)
                    if factor.is_zero():
                        break
                if factor.is_zero():
                    continue
                sets = tuple(_mask_to_set(b) for b in blocks)
                acc = acc - fn(contract(g, sets)) * factor
            acc.assert_integral("wonderful complex value")
            deg = g.n - 2
            for k in range(0, deg + 1):
                assert acc.coeff_q(k) == acc.coeff_q(deg - k), (
                    f"Poincare palindromicity fails on {g!r}: {acc}"
                )
            return acc

        fn._evaluate = evaluate
        return fn

    return _get("wonderful_C", build)


def wonderful_real_gf() -> GraphicFunction:
    """sum_i (-q)^i dim H_i of the real locus, via the odd-block recurrence

        sum over odd partitions I of value(G/I) * sqrt(q)^(n - |I|) = 1.

    Blocks all odd forces n = |I| mod 2, so only integer powers of q occur;
    integrality is asserted.
    """

    def build():
        fn = GraphicFunction("wonderful_R", lambda g: None)

        def evaluate(g: Graph):
            if g.n == 1:
                return QPoly.one()
            acc = QPoly.one()
            for blocks in graph_partition_masks(g, odd_only=True):
                if len(blocks) == g.n:
                    continue
                halves = g.n - len(blocks)
                weight = QPoly.sqrt_q(halves)
                sets = tuple(_mask_to_set(b) for b in blocks)
                acc = acc - fn(contract(g, sets)) * weight
            acc.assert_integral("wonderful real value")
            return acc

        fn._evaluate = evaluate
        return fn

    return _get("wonderful_R", build)


def hyper_weighted_gf() -> GraphicFunction:
    """Weight-graded Hilbert series of the hypercommutative contractad:
    q * wonderful_complex + (1 - q) * eps."""

    def build():
        wc = wonderful_complex_gf()

        def evaluate(g: Graph):
            value = QPoly.q() * wc(g)
            if g.n == 1:
                value = value + (QPoly.one() - QPoly.q())
            return value

        return GraphicFunction("hyper", evaluate)

    return _get("hyper", build)


def grav_weighted_gf() -> GraphicFunction:
    """Weight-graded Hilbert series (at -q) of the gravity contractad:
    q/(q-1) * gerst - 1/(q-1) * eps, with the division exact by construction."""

    def build():
        gerst = gerst_hilbert_gf()
        qmin1 = QPoly.q() - QPoly.one()

        def evaluate(g: Graph):
            numerator = QPoly.q() * gerst(g)
            if g.n == 1:
                numerator = numerator - QPoly.one()
            return numerator.divexact(qmin1)

        return GraphicFunction("grav", evaluate)

    return _get("grav", build)


def chromatic_symfun_tree_gf(nvars: int | None = None) -> GraphicFunction:
    """Stanley's chromatic symmetric function on trees, as 1 * (1_{-1} . p).

    p sends a graph on n vertices to the power sum p_n.  The product formula
    is an identity of graphic functions only on trees, so non-tree input is
    rejected.  Values are symmetric functions in max(nvars, n) variables.
    """
    from .symfunc import SymFunc

    def evaluate(g: Graph):
        if g.m != g.n - 1:
            raise ValueError("the chromatic symmetric function formula is valid on trees only")
        D = max(nvars or 0, g.n)
        signed_p = GraphicFunction(
            "(1_-1 . p)", lambda h: SymFunc.power_sum(h.n, D).scale(Fraction((-1) ** (h.n - 1)))
        )
        return convolve(one_gf(), signed_p)(g)

    return GraphicFunction("X_sym", evaluate)
