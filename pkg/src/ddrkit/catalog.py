"""Named point-set constructions used by the demos and tests.

Everything is generated from first principles (no embedded tables): the
extended Hamming code comes from spanning degree-bounded Boolean monomials,
the simplex code from all nonzero parity functionals, the Fano plane from the
lines of the 7-point projective plane, and the groups from parity/closure.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from . import empirics, spaces
from .empirics import PointSet
from .errors import InvalidParameterError


def _span_f2(generators: list[int], width: int) -> list[tuple[int, ...]]:
    """All XOR combinations of the generator rows, as symbol tuples."""
    words = []
    for mask in range(2 ** len(generators)):
        acc = 0
        m = mask
        i = 0
        while m:
            if m & 1:
                acc ^= generators[i]
            m >>= 1
            i += 1
        words.append(tuple((acc >> (width - 1 - j)) & 1 for j in range(width)))
    return sorted(set(words))


def extended_hamming_code(m: int = 4) -> PointSet:
    """The [2^m, 2^m - m - 1] extended Hamming code.

    Built as the span of evaluations of all Boolean monomials of degree at
    most m - 2 on the points of {0,1}^m (the Reed-Muller construction); for
    m = 4 this is the 2048-word, 16-column code of even weights >= 4.
    """
    if m < 2:
        raise InvalidParameterError("extended Hamming code needs m >= 2")
    width = 2**m
    points = list(product((0, 1), repeat=m))
    generators = []
    for deg in range(m - 1):
        for support in combinations(range(m), deg):
            row = 0
            for pt in points:
                bit = 1
                for i in support:
                    bit &= pt[i]
                row = (row << 1) | bit
            generators.append(row)
    space = spaces.make_space("hamming", width, 2)
    return empirics.point_set(space, _span_f2(generators, width))


def simplex_code(m: int) -> PointSet:
    """The [2^m - 1, m] simplex code: every nonzero word has weight 2^{m-1}."""
    if m < 2:
        raise InvalidParameterError("simplex code needs m >= 2")
    width = 2**m - 1
    columns = list(range(1, 2**m))  # all nonzero m-bit vectors
    generators = []
    for i in range(m):
        row = 0
        for c in columns:
            row = (row << 1) | ((c >> i) & 1)
        generators.append(row)
    space = spaces.make_space("hamming", width, 2)
    return empirics.point_set(space, _span_f2(generators, width))


def even_weight_code(n: int) -> PointSet:
    """All length-n binary words of even weight."""
    space = spaces.make_space("hamming", n, 2)
    words = [w for w in product((0, 1), repeat=n) if sum(w) % 2 == 0]
    return empirics.point_set(space, words)


def fano_plane() -> PointSet:
    """The 7 lines of the projective plane of order 2, as blocks in J(7, 3).

    Lines are the size-3 subsets closed under the XOR rule a ^ b = c on the
    labels 1..7 (labels shifted down to 0..6).
    """
    blocks = [
        tuple(sorted(x - 1 for x in triple))
        for triple in combinations(range(1, 8), 3)
        if triple[0] ^ triple[1] == triple[2]
    ]
    space = spaces.make_space("johnson", 7, 3)
    return empirics.point_set(space, blocks)


def symmetric_group(n: int) -> PointSet:
    space = spaces.make_space("symmetric", n)
    return empirics.point_set(space, permutations(range(n)))


def _parity(p: tuple[int, ...]) -> int:
    inversions = sum(
        1 for i in range(len(p)) for k in range(i) if p[k] > p[i]
    )
    return inversions % 2


def alternating_group(n: int) -> PointSet:
    space = spaces.make_space("symmetric", n)
    return empirics.point_set(
        space, [p for p in permutations(range(n)) if _parity(p) == 0]
    )


def cyclic_group(n: int) -> PointSet:
    """The rotations <(0 1 .. n-1)> inside the symmetric space."""
    space = spaces.make_space("symmetric", n)
    rotations = [
        tuple((i + shift) % n for i in range(n)) for shift in range(n)
    ]
    return empirics.point_set(space, rotations)


def klein_four_group() -> PointSet:
    """{e, (01)(23), (02)(13), (03)(12)} in the 4-letter space."""
    space = spaces.make_space("symmetric", 4)
    return empirics.point_set(
        space, [(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]
    )


NAMED = {
    "extended-hamming-16": lambda: extended_hamming_code(4),
    "simplex-7": lambda: simplex_code(3),
    "even-weight-3": lambda: even_weight_code(3),
    "fano-plane": fano_plane,
    "alternating-4": lambda: alternating_group(4),
    "symmetric-4": lambda: symmetric_group(4),
    "klein-four": klein_four_group,
}


def named_point_set(name: str) -> PointSet:
    if name not in NAMED:
        raise InvalidParameterError(
            f"unknown dataset {name!r}; available: {', '.join(sorted(NAMED))}"
        )
    return NAMED[name]()
