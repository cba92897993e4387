"""Design strength: algebraic certificates and combinatorial oracles.

A subset is a t-design when its first t pair-distance moments match the whole
space's, equivalently when its first t dual frequencies vanish. Both tests are
exact. Independent combinatorial oracles (orthogonal-array balance, block
coverage, tuple transitivity) decide strength without touching polynomials, so
the two routes can be checked against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, perm

import numpy as np

from . import empirics
from .empirics import FrequencyVector, PointSet
from .errors import NotAGroupError, SpaceMismatchError, TooLargeError
from .orthopoly import MonicOrthogonalSystem, build_measure, gram_schmidt
from .spaces import HAMMING, JOHNSON, SYMMETRIC, Space


@dataclass(frozen=True)
class DualFrequencies:
    """Coordinates of the frequency vector against the orthonormal system.

    numerators[i] = sum_k p_i(k) f_k is exact, so vanishing is decidable with
    no epsilon; values divides by the norm sqrt for display.
    """

    numerators: tuple[Fraction, ...]
    sqnorms: tuple[Fraction, ...]

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(
            float(num) / float(sq) ** 0.5
            for num, sq in zip(self.numerators, self.sqnorms)
        )

    def __len__(self) -> int:
        return len(self.numerators)


def dual_frequencies(
    f: FrequencyVector, system: MonicOrthogonalSystem
) -> DualFrequencies:
    """hat f_i for i = 0..N against the system's measure."""
    numerators = tuple(
        sum(
            (fk * system.eval_monic(i, k) for k, fk in enumerate(f.values) if fk),
            Fraction(0),
        )
        for i in range(system.degree + 1)
    )
    return DualFrequencies(numerators, system.sqnorms)


def strength_by_moments(
    f: FrequencyVector, space: Space, t_max: int | None = None
) -> int:
    """Largest t <= t_max with moments 1..t of f equal to the space's, exactly.

    t_max defaults to the measure capacity N(X); beyond it the polynomial
    method cannot certify anything.
    """
    space_f = empirics.space_frequencies(space)
    cap = build_measure(space).capacity
    t_max = cap if t_max is None else min(t_max, cap)
    t = 0
    while t < t_max and empirics.moment(f, t + 1) == empirics.moment(space_f, t + 1):
        t += 1
    return t


def strength_by_dual(dual: DualFrequencies) -> int:
    """Largest t with hat f_1 .. hat f_t all exactly zero."""
    t = 0
    while t < len(dual) - 1 and dual.numerators[t + 1] == 0:
        t += 1
    return t


def oa_strength(ps: PointSet, max_cells: int = 2**62) -> int:
    """Orthogonal-array strength of a word set: largest t such that every
    choice of t columns shows each of the q^t patterns equally often."""
    if ps.space.family != HAMMING:
        raise SpaceMismatchError(f"orthogonal arrays live in hamming, got {ps.space.describe()}")
    n, q = ps.space.params
    rows = np.asarray(ps.elements, dtype=np.int64)
    t = 0
    while t < n:
        width = t + 1
        cells = q**width
        if cells > max_cells:
            raise TooLargeError(f"q^t = {cells} pattern cells exceed cap {max_cells}")
        if ps.size % cells != 0:
            break  # equal occupancy of q^t cells needs q^t | |D|
        powers = q ** np.arange(width, dtype=np.int64)
        balanced = True
        for cols in combinations(range(n), width):
            codes = rows[:, cols] @ powers
            counts = np.bincount(codes, minlength=cells)
            if not (counts == counts[0]).all():
                balanced = False
                break
        if not balanced:
            break
        t = width
    return t


@dataclass(frozen=True)
class BlockDesignStrength:
    """t and the constant block count eta at that t (eta = |D| at t = 0)."""

    t: int
    eta: int


def block_design_strength(ps: PointSet) -> BlockDesignStrength:
    """Largest t such that every t-subset of the groundset lies in a constant
    number eta of blocks."""
    if ps.space.family != JOHNSON:
        raise SpaceMismatchError(f"block designs live in johnson, got {ps.space.describe()}")
    nu, d = ps.space.params
    best = BlockDesignStrength(0, ps.size)
    for t in range(1, d + 1):
        total = comb(nu, t)
        if ps.size * comb(d, t) % total != 0:
            break  # coverage count must average to an integer
        counts: dict[tuple[int, ...], int] = {}
        for block in ps.elements:
            for sub in combinations(block, t):
                counts[sub] = counts.get(sub, 0) + 1
        values = set(counts.values())
        if len(counts) != total or len(values) != 1:
            break
        best = BlockDesignStrength(t, values.pop())
    return best


def _compose(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """(a o b)[i] = a[b[i]]."""
    return tuple(a[x] for x in b)


def _inverse(a: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def check_group(ps: PointSet) -> None:
    """Raise unless the permutation set is closed under composition and inverse."""
    if ps.space.family != SYMMETRIC:
        raise SpaceMismatchError(f"groups live in symmetric, got {ps.space.describe()}")
    members = set(ps.elements)
    for a in ps.elements:
        if _inverse(a) not in members:
            raise NotAGroupError(f"inverse of {a} missing")
        for b in ps.elements:
            if _compose(a, b) not in members:
                raise NotAGroupError(f"product {a} o {b} missing")


def transitivity_degree(ps: PointSet) -> int:
    """Largest t such that the group moves some ordered t-tuple of distinct
    letters onto every other (single orbit)."""
    check_group(ps)
    (n,) = ps.space.params
    t = 0
    while t < n:
        width = t + 1
        base = tuple(range(width))
        orbit = {tuple(g[i] for i in base) for g in ps.elements}
        if len(orbit) != perm(n, width):
            break
        t = width
    return t


def fixed_point_counts(ps: PointSet) -> list[int]:
    """Number of fixed letters of each permutation, in element order."""
    if ps.space.family != SYMMETRIC:
        raise SpaceMismatchError(f"fixed points live in symmetric, got {ps.space.describe()}")
    return [sum(1 for i, x in enumerate(g) if i == x) for g in ps.elements]


def fixed_point_moments(ps: PointSet, t: int) -> list[Fraction]:
    """E(F^i) for i = 1..t, where F counts fixed points of a uniform element."""
    counts = fixed_point_counts(ps)
    size = ps.size
    return [
        Fraction(sum(c**i for c in counts), size)
        for i in range(1, t + 1)
    ]


def bell_numbers(t: int) -> list[int]:
    """B_1..B_t, the moments of a Poisson law with parameter one."""
    bells = [1]  # B_0
    for i in range(t):
        bells.append(sum(comb(i, k) * bells[k] for k in range(i + 1)))
    return bells[1:]


@dataclass(frozen=True)
class DesignReport:
    """Strengths by every applicable method plus agreement flags.

    capped marks that the algebraic strength hit the measure capacity N(X)
    with all tested moments matching, i.e. nothing beyond is certifiable.
    """

    strength_moments: int
    strength_dual: int
    combinatorial: int | None
    combinatorial_method: str | None
    capped: bool
    eta: int | None = None

    @property
    def agree(self) -> bool:
        if self.strength_moments != self.strength_dual:
            return False
        if self.combinatorial is None:
            return True
        if self.combinatorial_method == "transitivity":
            # Tuple transitivity only lower-bounds the design strength, and the
            # algebraic side is capped at N(X).
            return self.combinatorial <= self.strength_moments or self.capped
        return self.combinatorial == self.strength_moments


def design_report(
    ps: PointSet,
    f: FrequencyVector | None = None,
    system: MonicOrthogonalSystem | None = None,
) -> DesignReport:
    """Run every applicable strength method on the point set."""
    if f is None:
        f = empirics.frequencies(ps)
    measure = build_measure(ps.space)
    if system is None:
        system = gram_schmidt(measure, measure.capacity)
    by_moments = strength_by_moments(f, ps.space)
    by_dual = strength_by_dual(dual_frequencies(f, system))
    combinatorial: int | None = None
    method: str | None = None
    eta: int | None = None
    if ps.space.family == HAMMING:
        combinatorial = oa_strength(ps)
        method = "orthogonal-array"
    elif ps.space.family == JOHNSON:
        bd = block_design_strength(ps)
        combinatorial, eta = bd.t, bd.eta
        method = "block-design"
    else:
        try:
            combinatorial = transitivity_degree(ps)
            method = "transitivity"
        except NotAGroupError:
            combinatorial = None
            method = None
    return DesignReport(
        strength_moments=by_moments,
        strength_dual=by_dual,
        combinatorial=combinatorial,
        combinatorial_method=method,
        capped=by_moments == measure.capacity,
        eta=eta,
    )
