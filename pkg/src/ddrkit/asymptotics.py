"""Desk-scale numeric checks of the limit behavior of the bounds.

Covers the normal approximation to the binomial c.d.f., the large-groundset
limit of valency-normalized Hahn values, and the limiting kernel obtained by
summing the squared limits as a geometric series. The linear-strength regime
(strength growing proportionally to the length) is out of scale for desk-size
instances; it is reported as such rather than approximated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import empirics, orthopoly
from .empirics import FrequencyVector
from .errors import InvalidParameterError

DEFAULT_LADDER = (40, 80, 160, 320)

OUT_OF_SCALE_NOTE = (
    "linear-strength asymptotics (strength proportional to length, length to "
    "infinity) are not reproducible at desk scale; reported gaps for fixed "
    "small designs are descriptive statistics with no asymptotic claim"
)


def normal_cdf(x: float) -> float:
    """Standard normal c.d.f. via the complementary error function."""
    return 0.5 * (1.0 + math.erf(x / math.sqrt(2.0)))


def binomial_cdf(n: int, x) -> Fraction:
    """B_n(x) = sum_{i <= x} C(n,i)/2^n, exact."""
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    x = Fraction(x)
    if x < 0:
        return Fraction(0)
    top = min(int(x), n)
    return Fraction(sum(comb(n, i) for i in range(top + 1)), 2**n)


def berry_esseen_gap(n: int) -> float:
    """sup over integer x of |B_n(x) - Psi((x - n/2)/sqrt(n/4))|."""
    sigma = math.sqrt(n / 4.0)
    return max(
        abs(float(binomial_cdf(n, x)) - normal_cdf((x - n / 2.0) / sigma))
        for x in range(n + 1)
    )


@dataclass(frozen=True)
class BerryEsseenRow:
    n: int
    gap: float
    scaled: float  # gap * sqrt(n), the quantity expected to stay bounded


def berry_esseen_scan(ns) -> list[BerryEsseenRow]:
    """Gap and sqrt(n)-scaled gap for each n, for trend inspection."""
    rows = []
    for n in ns:
        g = berry_esseen_gap(n)
        rows.append(BerryEsseenRow(n=n, gap=g, scaled=g * math.sqrt(n)))
    return rows


def hahn_limit_value(k: int, p: Fraction, x: Fraction) -> float:
    """Closed-form limit (1 - x/q)^k / sqrt((pq)^k) with q = 1 - p.

    Computed exactly when (pq)^k is a perfect rational square (so the k = 1,
    p = 1/2 case is exactly 4/5 at x = 3/10, for instance).
    """
    p, x = Fraction(p), Fraction(x)
    q = 1 - p
    num = (1 - x / q) ** k
    exact, approx = orthopoly.sqrt_fraction((p * q) ** k)
    if exact is not None:
        return float(num / exact)
    return float(num) / approx


@dataclass(frozen=True)
class LimitCheck:
    """Ladder of valency-normalized Hahn values against their limit."""

    k: int
    p: Fraction
    x: Fraction
    ladder: tuple[int, ...]
    block_sizes: tuple[int, ...]
    observed: tuple[float, ...]
    limit: float
    errors: tuple[float, ...]

    @property
    def monotone_decreasing(self) -> bool:
        """Non-increasing error over the last three rungs (flat only when
        the rungs are already exact)."""
        tail = self.errors[-3:]
        return all(a >= b for a, b in zip(tail, tail[1:]))

    @property
    def final_error(self) -> float:
        return self.errors[-1]


def hahn_limit_check(
    k: int, p, x, ladder: tuple[int, ...] = DEFAULT_LADDER
) -> LimitCheck:
    """Evaluate H_k(x n)/sqrt(v_k) on each rung (n = round(p nu)) against the
    closed-form limit."""
    p, x = Fraction(p), Fraction(x)
    if not 0 < p < 1:
        raise InvalidParameterError("p must lie strictly between 0 and 1")
    if not 0 < x < 1:
        raise InvalidParameterError("x must lie strictly between 0 and 1")
    if k < 0 or k > 6:
        raise InvalidParameterError("k must lie in 0..6")
    limit = hahn_limit_value(k, p, x)
    block_sizes = []
    observed = []
    for nu in ladder:
        n = round(p * nu)
        if k > min(n, nu - n):
            raise InvalidParameterError(
                f"rung nu={nu} gives block size {n}, too small for degree {k}"
            )
        z = x * n
        h = orthopoly.hahn(k, z, nu, n)
        v_k = comb(n, k) * comb(nu - n, k)
        block_sizes.append(n)
        observed.append(float(h) / math.sqrt(v_k))
    errors = tuple(abs(o - limit) for o in observed)
    return LimitCheck(
        k=k,
        p=p,
        x=x,
        ladder=tuple(ladder),
        block_sizes=tuple(block_sizes),
        observed=tuple(observed),
        limit=limit,
        errors=errors,
    )


@dataclass(frozen=True)
class LimitKernel:
    """Geometric-series limit of the valency-normalized kernel sum.

    ratio is the square of the degree-1 limit; printed_ratio is the same
    expression with a square root on pq, an alternative reading recorded for
    comparison (the series below always uses ratio).
    """

    k: int
    p: Fraction
    x: Fraction
    ratio: float
    printed_ratio: float
    kernel: float
    lam: float
    degenerate: bool


def limit_kernel(k: int, p, x) -> LimitKernel:
    """sum_{j=0}^k of squared degree-j limits = sum of ratio^j, and its
    reciprocal as the limiting Christoffel value.

    At ratio 1 the geometric form degenerates and the sum is just k + 1.
    """
    p, x = Fraction(p), Fraction(x)
    q = 1 - p
    ratio_exact = (1 - x / q) ** 2 / (p * q)
    ratio = float(ratio_exact)
    _, sqrt_pq = orthopoly.sqrt_fraction(p * q)
    printed_ratio = float((1 - x / q) ** 2) / sqrt_pq
    degenerate = ratio_exact == 1
    if degenerate:
        kernel_sum = float(k + 1)
    else:
        kernel_sum = float((1 - ratio_exact ** (k + 1)) / (1 - ratio_exact))
    return LimitKernel(
        k=k,
        p=p,
        x=x,
        ratio=ratio,
        printed_ratio=printed_ratio,
        kernel=kernel_sum,
        lam=1.0 / kernel_sum,
        degenerate=degenerate,
    )


def finite_kernel(k: int, nu: int, n: int, x) -> float:
    """Finite-size counterpart sum_{j<=k} H_j(x n)^2 / v_j at one rung."""
    x = Fraction(x)
    z = x * n
    total = 0.0
    for j in range(k + 1):
        h = orthopoly.hahn(j, z, nu, n)
        v_j = comb(n, j) * comb(nu - n, j)
        total += float(h * h / v_j)
    return total


def johnson_space_cdf(nu: int, n: int, x) -> Fraction:
    """J(nu, n; x) = sum_{i <= x} v_i / C(nu, n), exact."""
    x = Fraction(x)
    if x < 0:
        return Fraction(0)
    top = min(int(x), n)
    return Fraction(
        sum(comb(n, i) * comb(nu - n, i) for i in range(top + 1)), comb(nu, n)
    )


def normal_gap_descriptive(f: FrequencyVector, n: int) -> float:
    """sup over integer x of |F_D(x) - Psi((x - n/2)/sqrt(n/4))|.

    A descriptive statistic for fixed small designs; see OUT_OF_SCALE_NOTE.
    """
    sigma = math.sqrt(n / 4.0)
    return max(
        abs(float(empirics.cdf(f, x)) - normal_cdf((x - n / 2.0) / sigma))
        for x in range(n + 1)
    )


@dataclass(frozen=True)
class RegimeStatus:
    """Marker that the linear-strength regime is out of scale here."""

    in_scope: bool = False
    note: str = OUT_OF_SCALE_NOTE


def linear_strength_regime_status() -> RegimeStatus:
    return RegimeStatus()
