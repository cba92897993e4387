"""The named constructions have the structure they claim."""

from collections import Counter

import pytest

from ddrkit import catalog, designs
from ddrkit.errors import InvalidParameterError


def weight_distribution(ps):
    return sorted(Counter(sum(word) for word in ps.elements).items())


def test_extended_hamming_16():
    code = catalog.extended_hamming_code(4)
    assert code.size == 2048
    assert code.space.params == (16, 2)
    assert weight_distribution(code) == [
        (0, 1), (4, 140), (6, 448), (8, 870), (10, 448), (12, 140), (16, 1),
    ]


def test_extended_hamming_8():
    code = catalog.extended_hamming_code(3)
    assert code.size == 16
    # the [8,4,4] extended Hamming code is self-dual with weights 0,4,8
    assert weight_distribution(code) == [(0, 1), (4, 14), (8, 1)]


def test_simplex_7():
    code = catalog.simplex_code(3)
    assert code.size == 8
    assert weight_distribution(code) == [(0, 1), (4, 7)]


def test_even_weight_code():
    code = catalog.even_weight_code(3)
    assert sorted(code.elements) == [(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)]


def test_fano_plane_is_a_projective_plane():
    fano = catalog.fano_plane()
    assert fano.size == 7
    result = designs.block_design_strength(fano)
    assert (result.t, result.eta) == (2, 1)


def test_groups():
    assert catalog.symmetric_group(4).size == 24
    assert catalog.alternating_group(4).size == 12
    assert catalog.cyclic_group(5).size == 5
    assert catalog.klein_four_group().size == 4
    for name in catalog.NAMED:
        ps = catalog.named_point_set(name)
        assert ps.size >= 1
    with pytest.raises(InvalidParameterError):
        catalog.named_point_set("nonexistent")


def test_groups_are_groups():
    for group in (
        catalog.symmetric_group(4),
        catalog.alternating_group(4),
        catalog.cyclic_group(6),
        catalog.klein_four_group(),
    ):
        designs.check_group(group)  # raises on failure
