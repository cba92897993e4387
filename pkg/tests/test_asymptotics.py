"""Limit checks: normal approximation, Hahn ladder, limiting kernel."""

from fractions import Fraction

import pytest

from ddrkit import asymptotics, empirics, spaces
from ddrkit.errors import InvalidParameterError


def test_normal_cdf_values():
    assert asymptotics.normal_cdf(0.0) == 0.5
    # reference value from the error-function series at double precision
    assert asymptotics.normal_cdf(1.96) == pytest.approx(0.9750021048517795, abs=1e-12)
    for x in (0.3, 1.0, 2.5, 7.0):
        assert asymptotics.normal_cdf(x) + asymptotics.normal_cdf(-x) == pytest.approx(1.0, abs=1e-14)


def test_binomial_cdf_values():
    assert asymptotics.binomial_cdf(4, 2) == Fraction(11, 16)
    assert asymptotics.binomial_cdf(9, 9) == 1
    assert asymptotics.binomial_cdf(16, 8) == Fraction(39203, 65536)
    assert asymptotics.binomial_cdf(5, -1) == 0


@pytest.mark.parametrize("n", [4, 16])
def test_binomial_cdf_matches_space_cdf(n):
    space = spaces.make_space("hamming", n, 2)
    f = empirics.space_frequencies(space)
    for x in range(n + 1):
        assert asymptotics.binomial_cdf(n, x) == empirics.cdf(f, x)


def test_berry_esseen_small_n():
    # two-point enumeration: B_1(0) = 1/2 against Psi(-1)
    expected = abs(0.5 - asymptotics.normal_cdf(-1.0))
    assert asymptotics.berry_esseen_gap(1) == pytest.approx(expected, abs=1e-15)


def test_berry_esseen_trend():
    rows = asymptotics.berry_esseen_scan(range(4, 65))
    assert all(r.scaled <= 1.0 for r in rows)
    # the gap itself shrinks roughly like 1/sqrt(n)
    assert rows[-1].gap < rows[0].gap


def test_hahn_limit_k0():
    check = asymptotics.hahn_limit_check(0, Fraction(1, 2), Fraction(3, 10))
    assert check.limit == 1.0
    assert all(e == 0 for e in check.errors)
    assert check.monotone_decreasing


def test_hahn_limit_k1():
    check = asymptotics.hahn_limit_check(1, Fraction(1, 2), Fraction(3, 10))
    assert check.limit == pytest.approx(0.8, abs=1e-12)
    assert check.errors[-3] > check.errors[-2] > check.errors[-1]
    assert check.final_error < 0.05
    assert check.block_sizes == (20, 40, 80, 160)


def test_hahn_limit_k2():
    check = asymptotics.hahn_limit_check(2, Fraction(1, 2), Fraction(3, 10))
    assert check.limit == pytest.approx(0.64, abs=1e-12)
    assert check.errors[-3] > check.errors[-2] > check.errors[-1]
    assert check.final_error < 0.05


def test_hahn_limit_parameter_guards():
    with pytest.raises(InvalidParameterError):
        asymptotics.hahn_limit_check(1, Fraction(3, 2), Fraction(1, 2))
    with pytest.raises(InvalidParameterError):
        asymptotics.hahn_limit_check(1, Fraction(1, 2), Fraction(3, 2))
    with pytest.raises(InvalidParameterError):
        asymptotics.hahn_limit_check(7, Fraction(1, 2), Fraction(1, 4))


def test_limit_kernel_values():
    k0 = asymptotics.limit_kernel(0, Fraction(1, 2), Fraction(3, 10))
    assert k0.kernel == 1.0 and k0.lam == 1.0
    k1 = asymptotics.limit_kernel(1, Fraction(1, 2), Fraction(3, 10))
    assert k1.ratio == pytest.approx(0.64, abs=1e-12)
    assert k1.lam == pytest.approx(1 / 1.64, abs=1e-12)
    # the alternative printed reading of the ratio is recorded alongside
    assert k1.printed_ratio == pytest.approx(0.32, abs=1e-12)
    assert not k1.degenerate


def test_limit_kernel_degenerate_ratio():
    # (1 - x/q)^2 = pq at x = 1/4 when p = q = 1/2
    k = asymptotics.limit_kernel(3, Fraction(1, 2), Fraction(1, 4))
    assert k.degenerate
    assert k.kernel == 4.0 and k.lam == 0.25


@pytest.mark.parametrize("x", [Fraction(1, 5), Fraction(3, 10), Fraction(2, 5)])
def test_limit_kernel_close_to_finite_kernel(x):
    for k in (1, 2):
        lim = asymptotics.limit_kernel(k, Fraction(1, 2), x)
        finite = asymptotics.finite_kernel(k, 320, 160, x)
        assert abs(finite - lim.kernel) / lim.kernel < 0.10


@pytest.mark.parametrize("nu,n", [(7, 3), (8, 3), (9, 4)])
def test_johnson_space_cdf_matches_empirics(nu, n):
    space = spaces.make_space("johnson", nu, n)
    f = empirics.space_frequencies(space)
    for x in range(n + 1):
        assert asymptotics.johnson_space_cdf(nu, n, x) == empirics.cdf(f, x)


def test_out_of_scale_marker():
    status = asymptotics.linear_strength_regime_status()
    assert status.in_scope is False
    assert "desk scale" in status.note


def test_descriptive_normal_gap():
    s = spaces.make_space("hamming", 16, 2)
    f = empirics.space_frequencies(s)
    gap = asymptotics.normal_gap_descriptive(f, 16)
    assert gap == pytest.approx(asymptotics.berry_esseen_gap(16), abs=1e-15)
