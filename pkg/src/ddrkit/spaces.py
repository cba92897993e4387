"""Distance degree regular metric spaces: Hamming words, Johnson blocks, permutations.

Each space knows its diameter, cardinality, and valency sequence v_0..v_diameter
(the common number of points at each distance from any fixed point). All counts
are exact Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Iterator

import numpy as np

from .errors import InvalidParameterError, SpaceMismatchError, TooLargeError

HAMMING = "hamming"
JOHNSON = "johnson"
SYMMETRIC = "symmetric"

FAMILIES = (HAMMING, JOHNSON, SYMMETRIC)

Point = tuple[int, ...]


def derangement_numbers(m: int) -> tuple[int, ...]:
    """D_0..D_m by the two-term recurrence D_k = (k-1)(D_{k-1} + D_{k-2}).

    The recurrence avoids the cancellation-heavy alternating-sum formula and
    stays exact for any m.
    """
    if m < 0:
        raise InvalidParameterError("derangement table needs m >= 0")
    table = [1, 0]
    for k in range(2, m + 1):
        table.append((k - 1) * (table[k - 1] + table[k - 2]))
    return tuple(table[: m + 1])


@dataclass(frozen=True)
class Space:
    """A concrete DDR metric space.

    params is (n, q) for hamming, (nu, d) for johnson, (n,) for symmetric.
    """

    family: str
    params: tuple[int, ...]
    diameter: int
    cardinality: int
    valencies: tuple[int, ...]

    def describe(self) -> str:
        return f"{self.family}({', '.join(str(p) for p in self.params)})"


def _require_family(space: Space, family: str) -> None:
    if space.family != family:
        raise SpaceMismatchError(
            f"expected a {family} space, got {space.describe()}"
        )


def make_space(family: str, *params: int) -> Space:
    """Construct a space descriptor with closed-form valencies.

    hamming n q:   v_i = C(n,i) (q-1)^i           (diameter n, size q^n)
    johnson nu d:  v_i = C(d,i) C(nu-d,i)         (diameter d, size C(nu,d), 2d < nu)
    symmetric n:   v_i = C(n,i) D_i               (diameter n, size n!)
    """
    if family == HAMMING:
        if len(params) != 2:
            raise InvalidParameterError("hamming needs (n, q)")
        n, q = params
        if n < 1:
            raise InvalidParameterError(f"hamming length must be >= 1, got n={n}")
        if q < 2:
            raise InvalidParameterError(f"hamming alphabet must be >= 2, got q={q}")
        valencies = tuple(comb(n, i) * (q - 1) ** i for i in range(n + 1))
        return Space(HAMMING, (n, q), n, q**n, valencies)
    if family == JOHNSON:
        if len(params) != 2:
            raise InvalidParameterError("johnson needs (nu, d)")
        nu, d = params
        if d < 1:
            raise InvalidParameterError(f"johnson block size must be >= 1, got d={d}")
        if 2 * d >= nu:
            raise InvalidParameterError(
                f"johnson requires 2d < nu, got d={d}, nu={nu}"
            )
        valencies = tuple(comb(d, i) * comb(nu - d, i) for i in range(d + 1))
        return Space(JOHNSON, (nu, d), d, comb(nu, d), valencies)
    if family == SYMMETRIC:
        if len(params) != 1:
            raise InvalidParameterError("symmetric needs (n,)")
        (n,) = params
        if n < 1:
            raise InvalidParameterError(f"symmetric needs n >= 1, got n={n}")
        der = derangement_numbers(n)
        valencies = tuple(comb(n, i) * der[i] for i in range(n + 1))
        return Space(SYMMETRIC, (n,), n, factorial(n), valencies)
    raise InvalidParameterError(f"unknown family {family!r}; expected one of {FAMILIES}")


def canonical_point(space: Space, values) -> Point:
    """Validate a raw point and return its canonical tuple form.

    Blocks are sorted ascending; permutations must be bijections in one-line
    notation; words must use symbols in [0, q).
    """
    values = tuple(int(v) for v in values)
    if space.family == HAMMING:
        n, q = space.params
        if len(values) != n:
            raise SpaceMismatchError(f"word has {len(values)} symbols, expected {n}")
        if any(v < 0 or v >= q for v in values):
            raise SpaceMismatchError(f"word symbols must lie in [0, {q}), got {values}")
        return values
    if space.family == JOHNSON:
        nu, d = space.params
        block = tuple(sorted(values))
        if len(block) != d:
            raise SpaceMismatchError(f"block has {len(block)} elements, expected {d}")
        if len(set(block)) != d:
            raise SpaceMismatchError(f"block has repeated elements: {values}")
        if block[0] < 0 or block[-1] >= nu:
            raise SpaceMismatchError(f"block indices must lie in [0, {nu}), got {values}")
        return block
    if space.family == SYMMETRIC:
        (n,) = space.params
        if len(values) != n or sorted(values) != list(range(n)):
            raise SpaceMismatchError(
                f"one-line permutation of 0..{n - 1} expected, got {values}"
            )
        return values
    raise SpaceMismatchError(f"unknown family {space.family!r}")


def distance(space: Space, p, r) -> int:
    """Exact distance between two points of the space.

    hamming: differing coordinates; johnson: d - |p & r|; symmetric:
    n minus the fixed points of p composed with r inverse.
    """
    p = canonical_point(space, p)
    r = canonical_point(space, r)
    if space.family == HAMMING:
        return sum(1 for a, b in zip(p, r) if a != b)
    if space.family == JOHNSON:
        _, d = space.params
        return d - len(set(p) & set(r))
    # Fixed points of p o r^{-1} are exactly the positions where p and r agree.
    return sum(1 for a, b in zip(p, r) if a != b)


def enumerate_points(space: Space) -> Iterator[Point]:
    """All points of the space in a deterministic order."""
    if space.family == HAMMING:
        n, q = space.params
        yield from product(range(q), repeat=n)
    elif space.family == JOHNSON:
        nu, d = space.params
        yield from combinations(range(nu), d)
    else:
        (n,) = space.params
        yield from permutations(range(n))


def point_rows(space: Space, elements: tuple[Point, ...]) -> tuple[np.ndarray, int]:
    """Row-matrix encoding under which every family's distance is a coordinate
    mismatch count.

    Words and permutations are used as-is; blocks become 0/1 characteristic
    vectors, where the mismatch count is twice the set distance. Returns the
    matrix and that divisor (2 for johnson, 1 otherwise).
    """
    if space.family == JOHNSON:
        nu, _ = space.params
        mat = np.zeros((len(elements), nu), dtype=np.int64)
        for i, block in enumerate(elements):
            mat[i, list(block)] = 1
        return mat, 2
    return np.asarray(elements, dtype=np.int64), 1


@dataclass(frozen=True)
class DdrVerification:
    """Outcome of the exhaustive distance-degree regularity check."""

    passed: bool
    checked: int
    profile: tuple[int, ...]
    counterexample: Point | None = None
    counterexample_profile: tuple[int, ...] | None = None


def verify_ddr(space: Space, max_cardinality: int) -> DdrVerification:
    """Enumerate every point, compare its distance-degree sequence against the
    valency sequence, and report the first mismatch if any.
    """
    if space.cardinality > max_cardinality:
        raise TooLargeError(
            f"{space.describe()} has {space.cardinality} points, cap is {max_cardinality}"
        )
    elements = tuple(enumerate_points(space))
    mat, divisor = point_rows(space, elements)
    nbins = space.diameter + 1
    chunk = max(1, 2**22 // max(1, mat.shape[0] * mat.shape[1]))
    for start in range(0, len(elements), chunk):
        stop = min(start + chunk, len(elements))
        dists = np.sum(mat[start:stop, None, :] != mat[None, :, :], axis=2, dtype=np.int64)
        if divisor != 1:
            dists //= divisor
        for local, idx in enumerate(range(start, stop)):
            profile = tuple(np.bincount(dists[local], minlength=nbins).tolist())
            if profile != space.valencies:
                return DdrVerification(
                    passed=False,
                    checked=idx + 1,
                    profile=space.valencies,
                    counterexample=elements[idx],
                    counterexample_profile=profile,
                )
    return DdrVerification(passed=True, checked=len(elements), profile=space.valencies)
