"""Strength certification: algebraic routes, combinatorial oracles, agreement."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from ddrkit import catalog, designs, empirics, orthopoly, spaces
from ddrkit.errors import NotAGroupError, SpaceMismatchError

EVEN_WEIGHT_3 = [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]


def full_system(space):
    m = orthopoly.build_measure(space)
    return orthopoly.gram_schmidt(m, m.capacity)


def test_dual_frequencies_whole_space():
    for space in (
        spaces.make_space("hamming", 4, 2),
        spaces.make_space("johnson", 5, 2),
        spaces.make_space("symmetric", 4),
    ):
        f = empirics.space_frequencies(space)
        duals = designs.dual_frequencies(f, full_system(space))
        assert duals.numerators[0] == 1
        assert all(v == 0 for v in duals.numerators[1:])


def test_dual_frequencies_even_weight():
    s = spaces.make_space("hamming", 3, 2)
    f = empirics.frequencies(empirics.point_set(s, EVEN_WEIGHT_3))
    duals = designs.dual_frequencies(f, full_system(s))
    assert duals.numerators[1] == 0
    assert duals.numerators[2] == 0
    assert duals.numerators[3] != 0
    # orthonormal coordinate has magnitude 1 (sign fixed by the monic leading
    # coefficient convention)
    assert abs(duals.values[3]) == pytest.approx(1.0, abs=1e-12)


def test_dual_frequencies_single_point():
    s = spaces.make_space("hamming", 4, 2)
    system = full_system(s)
    f = empirics.frequencies(empirics.point_set(s, [(0, 0, 0, 0)]))
    duals = designs.dual_frequencies(f, system)
    for i, num in enumerate(duals.numerators):
        assert num == orthopoly.poly_eval(system.coeffs[i], 0)


def test_strength_by_moments_even_weight():
    s = spaces.make_space("hamming", 3, 2)
    f = empirics.frequencies(empirics.point_set(s, EVEN_WEIGHT_3))
    assert designs.strength_by_moments(f, s) == 2
    # the first mismatching moment is the third: 6 vs 27/4
    assert empirics.moment(f, 3) == 6
    assert empirics.moment(empirics.space_frequencies(s), 3) == Fraction(27, 4)


def test_whole_space_strength_caps_at_capacity():
    for space in (
        spaces.make_space("hamming", 4, 2),
        spaces.make_space("symmetric", 4),
        spaces.make_space("johnson", 5, 2),
    ):
        f = empirics.space_frequencies(space)
        cap = orthopoly.build_measure(space).capacity
        assert designs.strength_by_moments(f, space) == cap
        duals = designs.dual_frequencies(f, full_system(space))
        assert designs.strength_by_dual(duals) == cap


def test_oa_strength_examples():
    s = spaces.make_space("hamming", 3, 2)
    assert designs.oa_strength(empirics.point_set(s, EVEN_WEIGHT_3)) == 2
    assert designs.oa_strength(empirics.full_space(s)) == 3
    assert designs.oa_strength(empirics.point_set(s, [(0, 1, 0)])) == 0
    with pytest.raises(SpaceMismatchError):
        designs.oa_strength(empirics.full_space(spaces.make_space("johnson", 5, 2)))


def test_oa_strength_cell_guard():
    from ddrkit.errors import TooLargeError

    s = spaces.make_space("hamming", 3, 2)
    with pytest.raises(TooLargeError):
        designs.oa_strength(empirics.point_set(s, EVEN_WEIGHT_3), max_cells=3)


def test_block_design_strength_examples():
    fano = catalog.fano_plane()
    result = designs.block_design_strength(fano)
    assert result.t == 2 and result.eta == 1
    j = spaces.make_space("johnson", 5, 2)
    assert designs.block_design_strength(empirics.full_space(j)).t == 2
    single = empirics.point_set(j, [(0, 1)])
    assert designs.block_design_strength(single).t == 0


def test_transitivity_examples():
    assert designs.transitivity_degree(catalog.alternating_group(4)) == 2
    assert designs.transitivity_degree(catalog.symmetric_group(3)) == 3
    assert designs.transitivity_degree(catalog.symmetric_group(4)) == 4
    assert designs.transitivity_degree(catalog.cyclic_group(3)) == 1
    assert designs.transitivity_degree(catalog.klein_four_group()) == 1


def test_not_a_group():
    s = spaces.make_space("symmetric", 3)
    ps = empirics.point_set(s, [(0, 1, 2), (1, 2, 0)])  # missing the inverse cycle
    with pytest.raises(NotAGroupError):
        designs.transitivity_degree(ps)


def test_fixed_point_moments_s3():
    s3 = catalog.symmetric_group(3)
    assert designs.fixed_point_moments(s3, 4) == [1, 2, 5, 14]
    assert designs.bell_numbers(4) == [1, 2, 5, 15]


def test_fixed_point_moments_a4():
    a4 = catalog.alternating_group(4)
    moments = designs.fixed_point_moments(a4, 3)
    assert moments[:2] == [1, 2]
    assert moments[2] == 6 != 5


@pytest.mark.parametrize("n", [3, 4, 5])
def test_full_symmetric_group_matches_bell_up_to_n(n):
    group = catalog.symmetric_group(n)
    assert designs.fixed_point_moments(group, n) == designs.bell_numbers(n)


def all_nonempty_subsets(points, max_size=None):
    max_size = len(points) if max_size is None else max_size
    for size in range(1, max_size + 1):
        yield from combinations(points, size)


def test_equivalence_exhaustive_hamming_2_2():
    """Moments, dual frequencies, and the array oracle agree on every subset."""
    space = spaces.make_space("hamming", 2, 2)
    system = full_system(space)
    points = list(spaces.enumerate_points(space))
    for subset in all_nonempty_subsets(points):
        ps = empirics.point_set(space, subset)
        f = empirics.frequencies(ps)
        by_moments = designs.strength_by_moments(f, space)
        by_dual = designs.strength_by_dual(designs.dual_frequencies(f, system))
        assert by_moments == by_dual
        assert by_moments == designs.oa_strength(ps)


@pytest.mark.parametrize("nu,d,samples", [(6, 2, 60), (7, 3, 60)])
def test_equivalence_random_johnson(nu, d, samples):
    space = spaces.make_space("johnson", nu, d)
    system = full_system(space)
    points = list(spaces.enumerate_points(space))
    rng = random.Random(20260808)
    for _ in range(samples):
        size = rng.randint(1, len(points))
        ps = empirics.point_set(space, rng.sample(points, size))
        f = empirics.frequencies(ps)
        by_moments = designs.strength_by_moments(f, space)
        assert by_moments == designs.strength_by_dual(
            designs.dual_frequencies(f, system)
        )
        assert by_moments == designs.block_design_strength(ps).t


@pytest.mark.parametrize(
    "group,expected_transitivity",
    [
        (catalog.alternating_group(4), 2),
        (catalog.klein_four_group(), 1),
        (catalog.cyclic_group(3), 1),
        (catalog.cyclic_group(4), 1),
    ],
)
def test_transitivity_lower_bounds_strength(group, expected_transitivity):
    t = designs.transitivity_degree(group)
    assert t == expected_transitivity
    f = empirics.frequencies(group)
    strength = designs.strength_by_moments(f, group.space)
    assert t <= strength or strength == orthopoly.build_measure(group.space).capacity


def test_design_report_fano():
    report = designs.design_report(catalog.fano_plane())
    assert report.strength_moments == report.strength_dual == 2
    assert report.combinatorial == 2 and report.eta == 1
    assert report.combinatorial_method == "block-design"
    assert report.agree and not report.capped


def test_design_report_arbitrary_permutations():
    # not a group: combinatorial oracle must be absent, algebra still works
    s = spaces.make_space("symmetric", 3)
    ps = empirics.point_set(s, [(0, 1, 2), (1, 2, 0)])
    report = designs.design_report(ps)
    assert report.combinatorial is None
    assert report.combinatorial_method is None
    assert report.strength_moments == report.strength_dual
