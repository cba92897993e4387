"""Acceptance suite.

One test per acceptance criterion, each printing a PASS line on success (run
with `pytest tests/test_acceptance.py -v -s` for the per-criterion report).

Known red: criterion 2c asserts the valency-normalized Hahn closed form
Phi_k^2 = H_k^2 / v_k on johnson(8,3) exactly as stated. The exact norm of H_k
under the valency law is the idempotent rank m_k = C(nu,k) - C(nu,k-1), not
v_k, so that sub-criterion cannot hold; the corrected identity is covered by
tests/test_orthopoly.py. Everything else passes.
"""

import random
import time
from fractions import Fraction
from itertools import combinations

from ddrkit import (
    asymptotics,
    bounds,
    catalog,
    cli,
    designs,
    empirics,
    orthopoly,
    spaces,
)


def report_pass(number, text):
    print(f"ACCEPTANCE {number}: PASS - {text}")


def build_system(space, degree=None):
    measure = orthopoly.build_measure(space)
    return orthopoly.gram_schmidt(
        measure, measure.capacity if degree is None else degree
    )


def test_criterion1_extended_hamming_reproduction(tmp_path):
    started = time.monotonic()
    code = catalog.extended_hamming_code(4)
    assert code.size == 2048 and code.space.params == (16, 2)
    path = tmp_path / "eh16.txt"
    path.write_text(cli.write_input_document(code))
    report = cli.run_analyze(cli.parse_input(str(path)))
    elapsed = time.monotonic() - started

    f = empirics.frequencies(code)
    assert f.values[4] == Fraction(140, 2048)
    f_d8 = empirics.cdf(f, 8)
    f_x8 = empirics.cdf(empirics.space_frequencies(code.space), 8)
    assert f_d8 == Fraction(1459, 2048)
    assert f_x8 == Fraction(39203, 65536)
    gap = abs(f_d8 - f_x8)
    assert abs(float(gap) - 0.114212) <= 1e-6

    strength = report.data["strength"]
    assert strength["moments"] == 7
    assert strength["dual"] == 7
    assert strength["combinatorial"] == 7

    assert report.data["bounds"]["corollary_kind"] == "binary-uniform-strength5"
    assert bounds.corollary_bound("binary-uniform-strength5", {"n": 16}) == Fraction(30, 46)
    assert report.data["bounds"]["all_satisfied"] is True
    assert report.data["bounds"]["corollary_ok"] is True
    point8 = report.data["bounds"]["points"][8]
    assert point8["F_D"] == "1459/2048 (0.712402)"
    assert point8["F_X"] == "39203/65536 (0.59819)"
    assert any(w.startswith("gap-rounding") for w in report.data["warnings"])
    assert report.exit_code == 0
    assert elapsed <= 60.0
    report_pass(1, f"extended Hamming analyzed in {elapsed:.1f}s, gap 7485/65536")


def test_criterion2a_orthonormality_exact():
    for space in (spaces.make_space("hamming", 10, 2), spaces.make_space("johnson", 8, 3)):
        measure = orthopoly.build_measure(space)
        system = build_system(space)
        for i in range(measure.capacity + 1):
            for j in range(measure.capacity + 1):
                got = sum(
                    w
                    * orthopoly.poly_eval(system.coeffs[i], z)
                    * orthopoly.poly_eval(system.coeffs[j], z)
                    for z, w in zip(measure.points, measure.weights)
                )
                assert got == (system.sqnorms[i] if i == j else 0), (space.family, i, j)
    report_pass("2a", "exact orthonormality on hamming(10,2) and johnson(8,3)")


def test_criterion2b_krawtchouk_agreement():
    space = spaces.make_space("hamming", 10, 2)
    system = build_system(space)
    for k in range(11):
        for x in range(11):
            expected = orthopoly.krawtchouk(k, x, 10, 2) ** 2 / Fraction(space.valencies[k])
            assert system.orthonormal_squared(k, x) == expected
    report_pass("2b", "Phi_k^2 = K_k^2/v_k exactly on hamming(10,2)")


def test_criterion2c_hahn_agreement_as_stated():
    """Asserts Phi_k^2 = H_k^2 / v_k on johnson(8,3) verbatim.

    Expected to fail: the exact norm constant is m_k = C(8,k) - C(8,k-1)
    (7, 20, 28 for k = 1, 2, 3), not the valency v_k (15, 30, 10).
    """
    space = spaces.make_space("johnson", 8, 3)
    system = build_system(space)
    for k in range(4):
        for x in range(4):
            expected = orthopoly.hahn(k, x, 8, 3) ** 2 / Fraction(space.valencies[k])
            got = system.orthonormal_squared(k, x)
            assert got == expected, (
                f"k={k} x={x}: Phi^2 = {got} but H^2/v_k = {expected}; "
                f"the exact norm is m_k = {orthopoly.johnson_rank(8, k)}, not "
                f"v_k = {space.valencies[k]}"
            )
    report_pass("2c", "Phi_k^2 = H_k^2/v_k exactly on johnson(8,3)")


def test_criterion3_equivalence_sweep():
    # all subsets of size <= 6 of hamming(3,2)
    space3 = spaces.make_space("hamming", 3, 2)
    system3 = build_system(space3)
    points3 = list(spaces.enumerate_points(space3))
    checked = 0
    for size in range(1, 7):
        for subset in combinations(points3, size):
            ps = empirics.point_set(space3, subset)
            f = empirics.frequencies(ps)
            by_moments = designs.strength_by_moments(f, space3)
            by_dual = designs.strength_by_dual(designs.dual_frequencies(f, system3))
            assert by_moments == by_dual, subset
            assert by_moments == designs.oa_strength(ps), subset
            checked += 1
    assert checked == 246

    # 200 random subsets of hamming(5,2)
    space5 = spaces.make_space("hamming", 5, 2)
    system5 = build_system(space5)
    points5 = list(spaces.enumerate_points(space5))
    rng = random.Random(518)
    for _ in range(200):
        size = rng.randint(1, 32)
        ps = empirics.point_set(space5, rng.sample(points5, size))
        f = empirics.frequencies(ps)
        by_moments = designs.strength_by_moments(f, space5)
        assert by_moments == designs.strength_by_dual(
            designs.dual_frequencies(f, system5)
        )
        assert by_moments == designs.oa_strength(ps)
        checked += 1
    report_pass(3, f"{checked} subsets, zero disagreements between the three methods")


def test_criterion4_fano_plane():
    fano = catalog.fano_plane()
    block = designs.block_design_strength(fano)
    assert block.t == 2 and block.eta == 1
    f = empirics.frequencies(fano)
    assert designs.strength_by_moments(f, fano.space) == 2
    report = bounds.christoffel_bound_check(
        fano, 2,
        corollary_kind="johnson-2design",
        corollary_params={"nu": 7, "n": 3},
    )
    assert report.all_satisfied
    for point in report.points:
        assert point.corollary == Fraction(64, 172)
        assert point.gap <= point.corollary
    report_pass(4, "Fano plane: 2-(7,3,1) design, all bounds hold")


def test_criterion5_permutation_groups():
    a4 = catalog.alternating_group(4)
    assert designs.transitivity_degree(a4) == 2

    s3 = catalog.symmetric_group(3)
    moments = designs.fixed_point_moments(s3, 4)
    assert moments == [1, 2, 5, 14]
    bell = designs.bell_numbers(4)
    mismatch = next(i + 1 for i, (m, b) in enumerate(zip(moments, bell)) if m != b)
    assert mismatch == 4

    f = empirics.frequencies(a4)
    duals = designs.dual_frequencies(f, build_system(a4.space))
    assert duals.numerators[1] == 0
    assert duals.numerators[2] == 0
    assert duals.numerators[3] != 0
    assert designs.strength_by_dual(duals) == 2
    report_pass(5, "A4 is a 2-design by exact dual frequencies; S3 moments match Bell through order 3")


def test_criterion6_markov_stieltjes():
    space = spaces.make_space("hamming", 16, 2)
    measure = orthopoly.build_measure(space)
    f = empirics.space_frequencies(space)
    for kappa in (1, 2, 3):
        system = orthopoly.gram_schmidt(measure, kappa)
        mass = sum(w for _, w in orthopoly.gauss_weights(system, kappa))
        assert abs(float(mass) - 1) <= 1e-10
        for x in range(17):
            lower, upper = bounds.markov_stieltjes_envelope(f, system, kappa, x)
            assert lower <= empirics.cdf(f, x) <= upper, (kappa, x)
    report_pass(6, "envelopes contain F_X at all integer x; Gauss masses within 1e-10 of 1")


def test_criterion7_hahn_limit():
    for k in (1, 2):
        check = asymptotics.hahn_limit_check(
            k, Fraction(1, 2), Fraction(3, 10), (40, 80, 160, 320)
        )
        assert check.errors[-3] > check.errors[-2] > check.errors[-1]
        assert check.final_error < 0.05
    k1 = asymptotics.hahn_limit_check(1, Fraction(1, 2), Fraction(3, 10))
    assert abs(k1.limit - 0.8) <= 1e-12
    report_pass(7, "Hahn ladder errors decrease; k=1 limit is 0.8 exactly")


def test_criterion8_berry_esseen_trend():
    rows = asymptotics.berry_esseen_scan(range(4, 65))
    worst = max(r.scaled for r in rows)
    assert worst <= 1.0
    report_pass(8, f"gap * sqrt(n) <= {worst:.3f} <= 1.0 for n in 4..64")


def test_criterion9_out_of_scale_report():
    status = asymptotics.linear_strength_regime_status()
    assert status.in_scope is False
    assert "not reproducible at desk scale" in status.note
    # the report path carries the marker
    report = cli.run_hahn_limit(1, Fraction(1, 2), Fraction(3, 10), (40, 80))
    assert report.data["regime_in_scope"] is False
    assert "desk scale" in report.data["regime_note"]
    report_pass(9, "linear-strength regime explicitly reported as out of scale")
