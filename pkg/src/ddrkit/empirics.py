"""Frequency vectors, moments, and cumulative distribution functions.

All probabilities are exact rationals. The distance of an equiprobably chosen
ordered pair of a point set D (diagonal included) is the random variable whose
law, moments, and c.d.f. live here.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import spaces
from .errors import InvalidParameterError, TooLargeError
from .spaces import Point, Space

DEFAULT_MAX_PAIRS = 10**10


@dataclass(frozen=True)
class PointSet:
    """A nonempty duplicate-free collection of points of one space."""

    space: Space
    elements: tuple[Point, ...]

    @property
    def size(self) -> int:
        return len(self.elements)


def point_set(space: Space, elements) -> PointSet:
    """Canonicalize elements and build a PointSet; duplicates are an error,
    never silently merged (ordered-pair frequencies assume a set)."""
    canon = tuple(spaces.canonical_point(space, e) for e in elements)
    if not canon:
        raise InvalidParameterError("point set must be nonempty")
    seen = set()
    for e in canon:
        if e in seen:
            raise InvalidParameterError(f"duplicate element {e}")
        seen.add(e)
    return PointSet(space, canon)


def full_space(space: Space) -> PointSet:
    """The whole space as a point set (D = X)."""
    return PointSet(space, tuple(spaces.enumerate_points(space)))


@dataclass(frozen=True)
class FrequencyVector:
    """f_0..f_n: the exact law of the pair distance. f_0 = 1/|D|, sum = 1."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if sum(self.values) != 1:
            raise InvalidParameterError("frequencies must sum to 1")
        if any(v < 0 for v in self.values):
            raise InvalidParameterError("frequencies must be nonnegative")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i]


def _strip_counts(mat: np.ndarray, start: int, stop: int, divisor: int, nbins: int) -> np.ndarray:
    """Distance counts over unordered pairs (i, j), start <= i < stop < ... j > i."""
    dists = np.sum(mat[start:stop, None, :] != mat[None, :, :], axis=2, dtype=np.int64)
    if divisor != 1:
        dists //= divisor
    above = np.arange(mat.shape[0])[None, :] > np.arange(start, stop)[:, None]
    return np.bincount(dists[above], minlength=nbins)


def _strip_counts_job(args) -> np.ndarray:
    return _strip_counts(*args)


def pair_distance_counts(
    space: Space,
    elements: tuple[Point, ...],
    max_pairs: int = DEFAULT_MAX_PAIRS,
    workers: int = 1,
) -> tuple[int, ...]:
    """Counts of ordered pairs of elements at each distance, diagonal included.

    The loop is O(|D|^2); max_pairs guards accidental blowup. With workers > 1
    the row strips are counted in separate processes and merged in a fixed
    order, so the result is deterministic.
    """
    n_elts = len(elements)
    if n_elts * n_elts > max_pairs:
        raise TooLargeError(
            f"{n_elts}^2 ordered pairs exceed the cap of {max_pairs}; raise max_pairs to override"
        )
    mat, divisor = spaces.point_rows(space, elements)
    nbins = space.diameter + 1
    chunk = max(1, 2**22 // max(1, n_elts * mat.shape[1]))
    strips = [(mat, s, min(s + chunk, n_elts), divisor, nbins) for s in range(0, n_elts, chunk)]
    if workers > 1 and len(strips) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_strip_counts_job, strips))
    else:
        parts = [_strip_counts(*s) for s in strips]
    unordered = np.sum(parts, axis=0)
    ordered = (2 * unordered).tolist()
    ordered[0] += n_elts
    return tuple(int(c) for c in ordered)


def frequencies(
    ps: PointSet,
    max_pairs: int = DEFAULT_MAX_PAIRS,
    workers: int = 1,
) -> FrequencyVector:
    """f_i = (# ordered pairs of D at distance i) / |D|^2, exactly."""
    counts = pair_distance_counts(ps.space, ps.elements, max_pairs=max_pairs, workers=workers)
    denom = ps.size * ps.size
    return FrequencyVector(tuple(Fraction(c, denom) for c in counts))


def space_frequencies(space: Space) -> FrequencyVector:
    """The law for D = X: f_i = v_i / |X|."""
    return FrequencyVector(
        tuple(Fraction(v, space.cardinality) for v in space.valencies)
    )


def moment(f: FrequencyVector, i: int) -> Fraction:
    """i-th raw moment sum_j f_j j^i (the 0th moment is the total mass 1)."""
    if i < 0:
        raise InvalidParameterError("moment order must be >= 0")
    return sum((fj * Fraction(j) ** i for j, fj in enumerate(f.values)), Fraction(0))


def cdf(f: FrequencyVector, x) -> Fraction:
    """F(x) = sum_{i <= x} f_i with non-strict inequality; clamps to 0 below 0
    and to 1 at or beyond the diameter."""
    x = Fraction(x)
    n = len(f.values) - 1
    if x < 0:
        return Fraction(0)
    if x >= n:
        return Fraction(1)
    top = int(x)  # floor for nonnegative x
    return sum(f.values[: top + 1], Fraction(0))


def cdf_table(f: FrequencyVector, xs=None) -> dict[Fraction, Fraction]:
    """c.d.f. sampled at the given thresholds (default: every integer 0..n)."""
    if xs is None:
        xs = range(len(f.values))
    return {Fraction(x): cdf(f, x) for x in xs}
