"""Christoffel-function bounds on design c.d.f.s and Markov-Stieltjes envelopes.

For a certified t-design D the gap |F_D(x) - F_X(x)| is bounded by the
Christoffel function lam(x) at degree cap floor(t/2). The same quadrature
weights give two-sided Markov-Stieltjes envelopes for both c.d.f.s, and four
closed-form specializations of lam are evaluated for the classical families.
Every comparison here is exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import designs, empirics, orthopoly
from .empirics import FrequencyVector, PointSet
from .errors import NotTransitiveEnoughError, StrengthError, UnknownKindError
from .orthopoly import MonicOrthogonalSystem

BOUND_KINDS = (
    "binary-uniform-strength5",
    "qary-strength2",
    "johnson-2design",
    "symmetric-2transitive",
)


def corollary_bound(kind: str, params: dict, x=None) -> Fraction:
    """Closed-form bound value for the given family/strength combination.

    binary-uniform-strength5: 2(n-1)/(3n-2), independent of x.
    qary-strength2:           n/(n + (n(q-1) - qx)^2).
    johnson-2design:          (nu-n)^3 / ((nu-n)^3 + n(nu-1)^2), independent of x.
    symmetric-2transitive:    n/(n + (1-x)^2), for the fixed-point c.d.f.
    """
    if kind == "binary-uniform-strength5":
        n = params["n"]
        return Fraction(2 * (n - 1), 3 * n - 2)
    if kind == "qary-strength2":
        n, q = params["n"], params["q"]
        k1 = n * (q - 1) - q * Fraction(x)
        return Fraction(n) / (n + k1 * k1)
    if kind == "johnson-2design":
        nu, n = params["nu"], params["n"]
        cube = (nu - n) ** 3
        return Fraction(cube, cube + n * (nu - 1) ** 2)
    if kind == "symmetric-2transitive":
        n = params["n"]
        c1 = 1 - Fraction(x)
        return Fraction(n) / (n + c1 * c1)
    raise UnknownKindError(f"unknown bound kind {kind!r}; expected one of {BOUND_KINDS}")


def markov_stieltjes_envelope(
    f: FrequencyVector,
    system: MonicOrthogonalSystem,
    kappa: int,
    x,
    tol: Fraction = orthopoly.DEFAULT_ZERO_TOL,
) -> tuple[Fraction, Fraction]:
    """Two-sided envelope lower <= F(x) <= lower + lam(x) from the quadrature
    rule with a node preassigned at x.

    lower is the weight of the rule strictly below x (x itself excluded); the
    rule is exact to degree 2 kappa, so the envelope contains the c.d.f. of
    the space and of any design of strength >= 2 kappa, and the two c.d.f.s
    share the same interval of width lam(x). When p_kappa(x) = 0 the rule is
    the kappa-point Gauss rule and the envelope reduces to the classical
    at-node partial sums.
    """
    x = Fraction(x)
    rule = orthopoly.constrained_quadrature(system, kappa, x, tol)
    if not rule.above:
        # All companion nodes sit below x, so the rule's mass identity gives
        # the lower sum exactly even when the node positions are approximate.
        lower = 1 - rule.lam_x
    else:
        lower = sum((w for _, w in rule.below), Fraction(0))
    upper = lower + rule.lam_x
    return lower, upper


@dataclass(frozen=True)
class BoundPoint:
    """One evaluation point of the c.d.f. gap bound."""

    x: Fraction
    f_d: Fraction
    f_x: Fraction
    gap: Fraction
    lam: Fraction
    satisfied: bool
    corollary: Fraction | None = None
    ms_lower: Fraction | None = None
    ms_upper: Fraction | None = None


@dataclass(frozen=True)
class BoundReport:
    """Per-point gap records for a certified strength t (cap = floor(t/2))."""

    t: int
    kappa: int
    points: tuple[BoundPoint, ...]

    @property
    def all_satisfied(self) -> bool:
        return all(p.satisfied for p in self.points)


def christoffel_bound_check(
    ps: PointSet,
    t: int,
    xs=None,
    f: FrequencyVector | None = None,
    corollary_kind: str | None = None,
    corollary_params: dict | None = None,
    max_pairs: int = empirics.DEFAULT_MAX_PAIRS,
    workers: int = 1,
) -> BoundReport:
    """Check |F_D(x) - F_X(x)| <= lam(x) at each x for a strength-t design.

    The claimed t is re-certified from the moments before anything else; the
    envelope columns are filled whenever kappa >= 1.
    """
    space = ps.space
    measure = orthopoly.build_measure(space)
    if t < 0:
        raise StrengthError("t must be >= 0")
    if t > measure.capacity:
        raise StrengthError(
            f"t = {t} exceeds the measure capacity N(X) = {measure.capacity}"
        )
    if f is None:
        f = empirics.frequencies(ps, max_pairs=max_pairs, workers=workers)
    actual = designs.strength_by_moments(f, space, t_max=t)
    if actual < t:
        raise StrengthError(f"point set has strength {actual}, below the claimed t = {t}")
    kappa = t // 2
    system = orthopoly.gram_schmidt(measure, kappa)
    space_f = empirics.space_frequencies(space)
    if xs is None:
        xs = range(space.diameter + 1)
    points = []
    for x in xs:
        x = Fraction(x)
        f_d = empirics.cdf(f, x)
        f_x = empirics.cdf(space_f, x)
        gap = abs(f_d - f_x)
        lam = orthopoly.kernel(system, x, kappa).lam
        cor = None
        if corollary_kind is not None:
            cor = corollary_bound(corollary_kind, corollary_params or {}, x)
        ms_lower = ms_upper = None
        if kappa >= 1:
            ms_lower, ms_upper = markov_stieltjes_envelope(f, system, kappa, x)
        points.append(
            BoundPoint(
                x=x,
                f_d=f_d,
                f_x=f_x,
                gap=gap,
                lam=lam,
                satisfied=gap <= lam,
                corollary=cor,
                ms_lower=ms_lower,
                ms_upper=ms_upper,
            )
        )
    return BoundReport(t=t, kappa=kappa, points=tuple(points))


def poisson_cdf(x) -> float:
    """Standard Poisson(1) c.d.f. sum_{0 <= i <= x} e^{-1}/i!."""
    x = Fraction(x)
    if x < 0:
        return 0.0
    return math.exp(-1) * float(
        sum(Fraction(1, math.factorial(i)) for i in range(int(x) + 1))
    )


def factorial_partial_sum(x) -> float:
    """The reference law printed alongside the fixed-point bound in older
    tables, sum_{1 <= i <= x} 1/i!; it exceeds 1 and is kept for comparison
    only."""
    x = Fraction(x)
    if x < 1:
        return 0.0
    return float(sum(Fraction(1, math.factorial(i)) for i in range(1, int(x) + 1)))


@dataclass(frozen=True)
class FixedPointBoundPoint:
    """Fixed-point count c.d.f. of a 2-transitive group versus Poisson(1)."""

    x: Fraction
    g_d: Fraction
    poisson: float
    gap: float
    bound: Fraction
    satisfied: bool
    partial_sum_reference: float


def _fixed_point_point(counts: list[int], size: int, n: int, x) -> FixedPointBoundPoint:
    x = Fraction(x)
    g_d = Fraction(sum(1 for c in counts if c <= x), size)
    p = poisson_cdf(x)
    bound = corollary_bound("symmetric-2transitive", {"n": n}, x)
    gap = abs(float(g_d) - p)
    return FixedPointBoundPoint(
        x=x,
        g_d=g_d,
        poisson=p,
        gap=gap,
        bound=bound,
        satisfied=gap <= float(bound),
        partial_sum_reference=factorial_partial_sum(x),
    )


def fixed_point_cdf_bound(ps: PointSet, x) -> FixedPointBoundPoint:
    """|G_D(x) - P(x)| against n/(n + (1-x)^2) for a verified 2-transitive group.

    G_D is the c.d.f. of the fixed-point count; P is the standard Poisson(1)
    c.d.f. (the normalized law whose moments the group matches), with the
    unnormalized factorial partial sum recorded alongside.
    """
    if designs.transitivity_degree(ps) < 2:
        raise NotTransitiveEnoughError("group is not 2-transitive")
    (n,) = ps.space.params
    return _fixed_point_point(designs.fixed_point_counts(ps), ps.size, n, x)


def fixed_point_cdf_table(ps: PointSet, xs=None) -> list[FixedPointBoundPoint]:
    """Fixed-point bound at every threshold (default: integers 0..n)."""
    if designs.transitivity_degree(ps) < 2:
        raise NotTransitiveEnoughError("group is not 2-transitive")
    (n,) = ps.space.params
    counts = designs.fixed_point_counts(ps)
    if xs is None:
        xs = range(n + 1)
    return [_fixed_point_point(counts, ps.size, n, x) for x in xs]
