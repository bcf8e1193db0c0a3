from fractions import Fraction
from math import factorial

import pytest

from contractads.qpoly import QPoly
from contractads.series import PowerSeries, series_compose
from contractads.graphic_functions import (
    chromatic_gf,
    mobius_gf,
    one_gf,
    one_q_gf,
    unit_gf,
    wonderful_complex_gf,
    wonderful_real_gf,
)
from contractads.family_series import (
    check_family_composition,
    closed_form,
    complete_complex_inverse,
    family_series,
    real_path_core,
)

q = QPoly.q()
N = 8


def geometric(order):
    return PowerSeries.from_terms("t", order, {n: 1 for n in range(1, order + 1)})


# -- assembled series: textbook values ---------------------------------------------


def test_series_of_one():
    assert family_series(one_gf(), "P", N).series == geometric(N)
    fk = family_series(one_gf(), "K", N).series
    assert all(fk.coefficient(n) == QPoly.const(Fraction(1, factorial(n))) for n in range(1, N + 1))
    fst = family_series(one_gf(), "St", N).series
    assert fst.coefficient(0) == QPoly.one()


def test_series_of_mobius():
    fp = family_series(mobius_gf(), "P", N).series
    assert all(fp.coefficient(n) == QPoly.const(Fraction((-1) ** (n - 1))) for n in range(1, N + 1))
    # F_C(mu) = t + t/(1+t) - log(1+t): coefficient of t^n is (-1)^(n-1)(n-1)/n
    fc = family_series(mobius_gf(), "C", N).series
    assert fc.coefficient(1) == QPoly.one()
    for n in range(2, N + 1):
        assert fc.coefficient(n) == QPoly.const(Fraction((-1) ** (n - 1) * (n - 1), n))
    # F_K(mu) = log(1+t)
    fkm = family_series(mobius_gf(), "K", N).series
    for n in range(1, N + 1):
        assert fkm.coefficient(n) == QPoly.const(Fraction((-1) ** (n - 1), n))
    # F_St(mu) = e^{-t}
    fstm = family_series(mobius_gf(), "St", N).series
    for n in range(0, N + 1):
        assert fstm.coefficient(n) == QPoly.const(Fraction((-1) ** n, factorial(n)))


def test_member_value_accessor():
    fs = family_series(mobius_gf(), "C", 5)
    assert fs.member_value(5) == QPoly.const(4)  # mu(C_5) = 4


# -- composition rules ---------------------------------------------------------------------


@pytest.mark.parametrize("family", ["P", "C", "K", "St"])
def test_composition_rule_one_mobius(family):
    report = check_family_composition(one_gf(), mobius_gf(), family, N)
    assert report.ok
    # 1 * mu = eps, whose P/K series is t
    if family in ("P", "K"):
        assert report.lhs == PowerSeries.identity("t", N)


def test_composition_rule_unit_left():
    report = check_family_composition(unit_gf(), chromatic_gf(), "P", N)
    assert report.ok
    assert report.lhs == family_series(chromatic_gf(), "P", N).series


def test_composition_rules_exhaustive_pairs():
    functions = {"one": one_gf(), "one_q": one_q_gf(), "mu": mobius_gf(), "chrom": chromatic_gf()}
    for fname, f in functions.items():
        for gname, g in functions.items():
            for family in ("P", "C", "K", "St"):
                if family == "St" and gname == "chrom":
                    with pytest.raises(ValueError):
                        check_family_composition(f, g, family, 6)
                    continue
                assert check_family_composition(f, g, family, 6).ok, (fname, gname, family)


def test_star_rule_product_form():
    # F_St(1_q * mu) = e^{qt} e^{-t} coefficientwise
    report = check_family_composition(one_q_gf(), mobius_gf(), "St", N)
    assert report.ok
    for n in range(N + 1):
        assert report.lhs.coefficient(n) == (q - 1) ** n * Fraction(1, factorial(n))


# -- closed forms ------------------------------------------------------------------------------


@pytest.mark.parametrize("family", ["P", "C", "K", "St"])
@pytest.mark.parametrize("target", ["complex", "real"])
def test_closed_forms_match_recurrence(target, family):
    fn = wonderful_complex_gf() if target == "complex" else wonderful_real_gf()
    assert closed_form(target, family, 6) == family_series(fn, family, 6).series


def test_complex_path_narayana_and_catalan():
    cf = closed_form("complex", "P", N)
    assert cf.coefficient(4) == 1 + 3 * q + q**2
    catalan = [1, 1, 2, 5, 14, 42, 132, 429]
    for n in range(1, N + 1):
        assert cf.coefficient(n).substitute(1) == catalan[n - 1]


def test_complex_star_euler_characteristics():
    cf = closed_form("complex", "St", N)
    assert cf.coefficient(2) == (1 + q) * Fraction(1, 2)
    for n in range(N + 1):
        assert cf.coefficient(n).substitute(1) * factorial(n) == factorial(n)


def test_complete_complex_reversion():
    g = complete_complex_inverse(N)
    fk = closed_form("complex", "K", N)
    t = PowerSeries.identity("t", N)
    assert series_compose(g, fk) == t
    assert series_compose(fk, g) == t


def test_real_path_coefficients():
    cf = closed_form("real", "P", N)
    assert cf.coefficient(1) == QPoly.one()
    assert cf.coefficient(2) == QPoly.one()
    assert cf.coefficient(3) == 1 - q


def test_real_core_series():
    # L_q(t) = t - q t^3 + 2 q^2 t^5 - ... (signed Catalan numbers)
    L = real_path_core(7)
    assert L.coefficient(1) == QPoly.one()
    assert L.coefficient(3) == -1 * q
    assert L.coefficient(5) == 2 * q**2
    assert L.coefficient(7) == -5 * q**3
    assert L.coefficient(2).is_zero() and L.coefficient(4).is_zero()


def test_real_star_series():
    cf = closed_form("real", "St", 6)
    assert cf.coefficient(0) == QPoly.one()
    assert cf.coefficient(2) == (1 - q) * Fraction(1, 2)


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        closed_form("complex", "Q", 4)
    with pytest.raises(ValueError):
        closed_form("projective", "P", 4)
    with pytest.raises(ValueError):
        family_series(one_gf(), "P", 0)
