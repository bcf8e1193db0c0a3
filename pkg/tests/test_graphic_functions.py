import random
from fractions import Fraction

import pytest

from contractads.qpoly import QPoly
from contractads.graphs import (
    Graph,
    canonical_key,
    chromatic_polynomial,
    complete_graph,
    count_acyclic_orientations,
    cycle_graph,
    path_graph,
    star_graph,
)
from contractads.graphic_functions import (
    GraphicFunction,
    chromatic_gf,
    chromatic_symfun_tree_gf,
    convolve,
    gerst_hilbert_gf,
    gerst_total_dim,
    grav_weighted_gf,
    hyper_weighted_gf,
    mobius_gf,
    one_gf,
    one_param_gf,
    one_q_gf,
    one_q_odd_gf,
    star_inverse,
    unit_gf,
    wonderful_complex_gf,
    wonderful_real_gf,
)
from contractads.symfunc import SymFunc

random.seed(1127)
q = QPoly.q()


def random_gf(name, seed, lo=-3, hi=3):
    """Deterministic pseudo-random integer-valued graphic function."""
    rng = random.Random(seed)
    cache = {}

    def evaluate(g):
        key = canonical_key(g)
        if key not in cache:
            cache[key] = rng.randint(lo, hi)
        return cache[key]

    return GraphicFunction(name, evaluate)


def connected_random_gf(name, seed):
    f = random_gf(name, seed)
    return GraphicFunction(name, lambda g: 1 if g.n == 1 else f(g))


# -- product structure ------------------------------------------------------------


def test_convolution_simple():
    assert convolve(one_gf(), one_gf())(path_graph(2)) == 2


def test_unit_laws(graphs_upto_6):
    eps = unit_gf()
    f = random_gf("f", 7)
    left = convolve(eps, f)
    right = convolve(f, eps)
    for g in graphs_upto_6:
        assert left(g) == f(g)
        assert right(g) == f(g)


def test_associativity_on_random_triples(graphs_upto_5):
    for seed in range(3):
        f = random_gf("f", 100 + seed)
        g = random_gf("g", 200 + seed)
        h = random_gf("h", 300 + seed)
        lhs = convolve(convolve(f, g), h)
        rhs = convolve(f, convolve(g, h))
        for graph in graphs_upto_5:
            assert lhs(graph) == rhs(graph)


def test_pointwise_product_of_powers(graphs_upto_5):
    # 1_x . 1_y = 1_{xy}, instantiated with x = 3, y = q
    f = one_param_gf(Fraction(3)) * one_param_gf(q)
    target = one_param_gf(3 * q)
    for g in graphs_upto_5:
        assert f(g) == target(g)


def test_technical_identities(graphs_upto_5):
    # 1_q.(f*g) = (1_q.f)*(1_q.g)   and   f*(q.g) = q.((1_q.f)*g)
    for seed in range(2):
        f = random_gf("f", 400 + seed)
        g = random_gf("g", 500 + seed)
        oq = one_q_gf()
        lhs1 = oq * convolve(f, g)
        rhs1 = convolve(oq * f, oq * g)
        lhs2 = convolve(f, g.scale(q))
        rhs2 = convolve(oq * f, g).scale(q)
        for graph in graphs_upto_5:
            assert lhs1(graph) == rhs1(graph)
            assert lhs2(graph) == rhs2(graph)


# -- star inversion ------------------------------------------------------------------


def test_mobius_closed_forms_small():
    mu = mobius_gf()
    assert mu(path_graph(4)) == -1
    assert mu(complete_graph(4)) == -6
    assert mu(cycle_graph(4)) == -3
    assert mu(star_graph(3)) == -1


def test_star_inverse_is_two_sided(graphs_upto_5):
    f = connected_random_gf("f", 42)
    inv = star_inverse(f)
    eps = unit_gf()
    left = convolve(inv, f)
    right = convolve(f, inv)
    for g in graphs_upto_5:
        assert left(g) == eps(g)
        assert right(g) == eps(g)


def test_star_inverse_requires_unit_value():
    f = GraphicFunction("2", lambda g: 2)
    with pytest.raises(ValueError):
        star_inverse(f)


# -- named Hilbert series ----------------------------------------------------------------


def test_chromatic_gf_matches_delcon(graphs_upto_5):
    chrom = chromatic_gf()
    for g in graphs_upto_5:
        assert chrom(g) == chromatic_polynomial(g)


def test_chromatic_examples():
    chrom = chromatic_gf()
    assert chrom(path_graph(1)) == q
    assert chrom(path_graph(3)) == q * (q - 1) ** 2
    assert chrom(cycle_graph(4)) == (q - 1) ** 4 + (q - 1)


def test_gerst_values():
    gerst = gerst_hilbert_gf()
    assert gerst(path_graph(1)) == QPoly.one()
    assert gerst(path_graph(2)) == 1 - q
    assert gerst(complete_graph(3)) == 1 - 3 * q + 2 * q**2


def test_gerst_counts_acyclic_orientations(graphs_upto_5):
    for g in graphs_upto_5:
        assert gerst_total_dim(g) == count_acyclic_orientations(g)


def test_wonderful_complex_values():
    wc = wonderful_complex_gf()
    assert wc(path_graph(1)) == QPoly.one()
    assert wc(path_graph(3)) == 1 + q
    assert wc(complete_graph(4)) == 1 + 5 * q + q**2


def test_wonderful_complex_palindromic(graphs_upto_5):
    wc = wonderful_complex_gf()
    for g in graphs_upto_5:
        value = wc(g)
        deg = max(g.n - 2, 0)
        for k in range(deg + 1):
            assert value.coeff_q(k) == value.coeff_q(deg - k)


def test_wonderful_real_values():
    wr = wonderful_real_gf()
    assert wr(path_graph(1)) == QPoly.one()
    assert wr(path_graph(2)) == QPoly.one()
    assert wr(complete_graph(3)) == 1 - q


def test_hyper_and_grav_values():
    assert hyper_weighted_gf()(complete_graph(4)) == q + 5 * q**2 + q**3
    assert hyper_weighted_gf()(path_graph(1)) == QPoly.one()
    assert grav_weighted_gf()(path_graph(2)) == -1 * q
    assert grav_weighted_gf()(path_graph(1)) == QPoly.one()


def test_koszul_pairings_small(graphs_upto_5):
    eps = unit_gf()
    com_lie = convolve(one_q_gf() * mobius_gf(), one_q_gf())
    hyper_grav = convolve(hyper_weighted_gf(), grav_weighted_gf())
    grav_hyper = convolve(grav_weighted_gf(), hyper_weighted_gf())
    for g in graphs_upto_5:
        assert com_lie(g) == eps(g)
        assert hyper_grav(g) == eps(g)
        assert grav_hyper(g) == eps(g)


def test_real_recurrence_uses_odd_blocks(graphs_upto_5):
    # chi_R * 1_q^odd = 1 on every graph
    pairing = convolve(wonderful_real_gf(), one_q_odd_gf())
    for g in graphs_upto_5:
        assert pairing(g) == QPoly.one()


# -- chromatic symmetric function on trees ---------------------------------------------------


def coloring_symfun(g, nvars):
    total = SymFunc.zero(nvars)
    for assignment in range(nvars**g.n):
        digits = []
        a = assignment
        for _ in range(g.n):
            digits.append(a % nvars)
            a //= nvars
        if all(digits[u] != digits[v] for u, v in g.edges):
            # the coloring contributes the monomial x_{c(0)} ... x_{c(n-1)}
            exps = [0] * nvars
            for v in range(g.n):
                exps[digits[v]] += 1
            lam = tuple(sorted((e for e in exps if e), reverse=True))
            # each sorted exponent vector appears once per coloring; m_lambda
            # collects them with multiplicity one per distinct arrangement
            total = total + SymFunc(nvars, {lam: Fraction(1, _arrangements(lam, nvars))})
    return total


def _arrangements(lam, nvars):
    from math import factorial

    counts = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
    zeros = nvars - len(lam)
    denom = factorial(zeros)
    for c in counts.values():
        denom *= factorial(c)
    return factorial(nvars) // denom


def test_chromatic_symfun_small_trees():
    xsym = chromatic_symfun_tree_gf(nvars=4)
    p1 = xsym(path_graph(1))
    assert p1 == SymFunc.power_sum(1, 4)
    p2 = xsym(path_graph(2))
    expected = SymFunc.power_sum(1, 4) * SymFunc.power_sum(1, 4) - SymFunc.power_sum(2, 4)
    assert p2 == expected


def test_chromatic_symfun_matches_coloring_oracle():
    xsym = chromatic_symfun_tree_gf(nvars=4)
    for g in [path_graph(3), star_graph(3), path_graph(4)]:
        assert xsym(g) == coloring_symfun(g, 4)


def test_chromatic_symfun_rejects_non_trees():
    xsym = chromatic_symfun_tree_gf()
    with pytest.raises(ValueError):
        xsym(cycle_graph(3))


# -- memo cap -----------------------------------------------------------------------------


def test_memo_cap_env(monkeypatch):
    monkeypatch.setenv("CONTRACTADS_MEMO_CAP", "1")
    f = GraphicFunction("probe", lambda g: g.n)
    assert f(path_graph(2)) == 2
    assert f(path_graph(3)) == 3
    assert len(f._memo) == 1
