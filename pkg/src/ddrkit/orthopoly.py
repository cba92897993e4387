"""Orthogonal polynomials for the valency measure of a DDR space.

The system is kept monic with exact rational coefficients and squared norms;
the orthonormal polynomials enter every bound only through their squares, so
the confluent kernel sum and the Christoffel function stay radical-free
rationals. Closed-form Krawtchouk, Hahn, and Charlier evaluations live here
too, as do kernel values and exact-bisection zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt

from .errors import (
    DegreeCapacityError,
    InvalidParameterError,
    ToleranceError,
    UnsupportedDegreeError,
)
from .spaces import Space

DEFAULT_ZERO_TOL = Fraction(1, 10**12)
_MAX_BISECTIONS = 10_000

Coeffs = tuple[Fraction, ...]


@dataclass(frozen=True)
class DiscreteMeasure:
    """Probability weights w_k = v_k/|X| on the support {k : v_k > 0}.

    capacity is the largest degree for which an orthonormal system exists:
    one less than the number of support points.
    """

    points: tuple[int, ...]
    weights: tuple[Fraction, ...]

    @property
    def capacity(self) -> int:
        return len(self.points) - 1


def build_measure(space: Space) -> DiscreteMeasure:
    points = tuple(i for i, v in enumerate(space.valencies) if v > 0)
    weights = tuple(
        Fraction(space.valencies[i], space.cardinality) for i in points
    )
    return DiscreteMeasure(points, weights)


def poly_eval(coeffs: Coeffs, x) -> Fraction:
    """Horner evaluation; exact for rational x."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _inner(measure: DiscreteMeasure, values_a, values_b) -> Fraction:
    return sum(
        (w * a * b for w, a, b in zip(measure.weights, values_a, values_b)),
        Fraction(0),
    )


@dataclass(frozen=True)
class MonicOrthogonalSystem:
    """Monic p_0..p_N with pairwise orthogonality under the measure.

    coeffs[i] is the dense coefficient list of p_i (constant term first);
    sqnorms[i] = <p_i, p_i> > 0. The orthonormal polynomial of degree i is
    p_i / sqrt(sqnorms[i]).
    """

    measure: DiscreteMeasure
    coeffs: tuple[Coeffs, ...]
    sqnorms: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval_monic(self, i: int, x) -> Fraction:
        return poly_eval(self.coeffs[i], x)

    def orthonormal_squared(self, i: int, x) -> Fraction:
        """Phi_i(x)^2 = p_i(x)^2 / <p_i, p_i>, an exact rational."""
        v = self.eval_monic(i, x)
        return v * v / self.sqnorms[i]


def gram_schmidt(measure: DiscreteMeasure, degree: int) -> MonicOrthogonalSystem:
    """Orthogonalize 1, x, .., x^degree against the measure, exactly.

    Beyond the capacity the bilinear form degenerates (fewer support points
    than coefficients), so such requests are rejected.
    """
    if degree < 0:
        raise InvalidParameterError("degree must be >= 0")
    if degree > measure.capacity:
        raise DegreeCapacityError(
            f"degree {degree} exceeds capacity {measure.capacity} "
            f"({len(measure.points)} support points)"
        )
    xs = [Fraction(z) for z in measure.points]
    polys: list[Coeffs] = []
    values: list[list[Fraction]] = []  # per-poly values on the support
    sqnorms: list[Fraction] = []
    for k in range(degree + 1):
        # Start from the monomial x^k and subtract its projections.
        coeff = [Fraction(0)] * k + [Fraction(1)]
        vals = [x**k for x in xs]
        for j in range(k):
            c = _inner(measure, vals, values[j]) / sqnorms[j]
            if c:
                for idx, pj in enumerate(polys[j]):
                    coeff[idx] -= c * pj
                vals = [v - c * w for v, w in zip(vals, values[j])]
        polys.append(tuple(coeff))
        values.append(vals)
        sq = _inner(measure, vals, vals)
        if sq <= 0:
            raise DegreeCapacityError(f"degenerate norm at degree {k}")
        sqnorms.append(sq)
    return MonicOrthogonalSystem(measure, tuple(polys), tuple(sqnorms))


def binom_rational(x, j: int) -> Fraction:
    """Generalized binomial coefficient C(x, j) = x(x-1)..(x-j+1)/j!."""
    if j < 0:
        return Fraction(0)
    x = Fraction(x)
    num = Fraction(1)
    for i in range(j):
        num *= x - i
    for i in range(2, j + 1):
        num /= i
    return num


def krawtchouk(k: int, x, n: int, q: int = 2) -> Fraction:
    """K_k(x) = sum_j (-1)^j (q-1)^{k-j} C(x,j) C(n-x,k-j), exact in rational x.

    Generating function: sum_k K_k(x) z^k = (1+(q-1)z)^{n-x} (1-z)^x, hence
    K_1(x) = n(q-1) - qx.
    """
    if k < 0 or k > n:
        raise InvalidParameterError(f"need 0 <= k <= n, got k={k}, n={n}")
    x = Fraction(x)
    total = Fraction(0)
    for j in range(k + 1):
        term = (q - 1) ** (k - j) * binom_rational(x, j) * binom_rational(n - x, k - j)
        total += -term if j % 2 else term
    return total


def johnson_rank(nu: int, k: int) -> int:
    """m_k = C(nu,k) - C(nu,k-1), the rank of the k-th Johnson idempotent."""
    return comb(nu, k) - (comb(nu, k - 1) if k >= 1 else 0)


def hahn(k: int, z, nu: int, n: int) -> Fraction:
    """Hahn polynomial for the Johnson association scheme J(nu, n), exact.

    H_k(z) = m_k sum_j (-1)^j [C(k,j) C(nu+1-k,j) / (C(n,j) C(nu-n,j))] C(z,j)
    with m_k = C(nu,k) - C(nu,k-1); H_k(0) = m_k.
    """
    if k < 0 or k > min(n, nu - n):
        raise InvalidParameterError(
            f"need 0 <= k <= min(n, nu-n), got k={k}, n={n}, nu={nu}"
        )
    z = Fraction(z)
    total = Fraction(0)
    for j in range(k + 1):
        term = (
            Fraction(comb(k, j) * comb(nu + 1 - k, j), comb(n, j) * comb(nu - n, j))
            * binom_rational(z, j)
        )
        total += -term if j % 2 else term
    return johnson_rank(nu, k) * total


def charlier(k: int, x) -> Fraction:
    """Charlier values used by the fixed-point bound: C_0 = 1, C_1(x) = 1 - x."""
    if k == 0:
        return Fraction(1)
    if k == 1:
        return 1 - Fraction(x)
    raise UnsupportedDegreeError(f"charlier degree {k} not supported (only 0 and 1)")


@dataclass(frozen=True)
class KernelValue:
    """Confluent kernel K(x) = sum_{i<=cap} Phi_i(x)^2 and lam(x) = 1/K(x)."""

    x: Fraction
    cap: int
    kernel: Fraction
    lam: Fraction


def kernel(system: MonicOrthogonalSystem, x, cap: int) -> KernelValue:
    """Exact Christoffel function value at x for the degree cap."""
    if cap < 0 or cap > system.degree:
        raise DegreeCapacityError(
            f"cap {cap} outside the system's degrees 0..{system.degree}"
        )
    x = Fraction(x)
    total = sum(
        (system.orthonormal_squared(i, x) for i in range(cap + 1)), Fraction(0)
    )
    return KernelValue(x=x, cap=cap, kernel=total, lam=1 / total)


@dataclass(frozen=True)
class ZeroBracket:
    """A root of a monic polynomial: exact if found, else lo < root < hi."""

    lo: Fraction
    hi: Fraction
    root: Fraction
    exact: bool


def _sign(v: Fraction) -> int:
    return (v > 0) - (v < 0)


def simplest_in_interval(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator strictly inside (lo, hi)."""
    if lo >= hi:
        raise InvalidParameterError("need lo < hi")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -simplest_in_interval(-hi, -lo)
    floor_lo = lo.numerator // lo.denominator
    if floor_lo + 1 < hi:
        return Fraction(floor_lo + 1)
    if lo == floor_lo:
        # (integer, hi) with hi <= integer + 1: take the largest unit fraction
        # below the gap.
        gap = hi - floor_lo
        m = (1 / gap).numerator // (1 / gap).denominator + 1
        return floor_lo + Fraction(1, m)
    frac_lo = lo - floor_lo
    frac_hi = hi - floor_lo
    return floor_lo + 1 / simplest_in_interval(1 / frac_hi, 1 / frac_lo)


def _bisect_root(coeffs: Coeffs, lo: Fraction, hi: Fraction, tol: Fraction) -> ZeroBracket:
    """Shrink a sign-change bracket to width tol.

    Each round probes the simplest rational inside the bracket before the
    midpoint, so a rational root is always found exactly once the bracket is
    tight enough that the root is its simplest point.
    """
    s_lo = _sign(poly_eval(coeffs, lo))
    s_hi = _sign(poly_eval(coeffs, hi))
    if s_lo == 0:
        return ZeroBracket(lo, lo, lo, True)
    if s_hi == 0:
        return ZeroBracket(hi, hi, hi, True)
    if s_lo == s_hi:
        raise ToleranceError(f"no sign change on [{lo}, {hi}]")
    for _ in range(_MAX_BISECTIONS):
        if hi - lo <= tol:
            mid = (lo + hi) / 2
            return ZeroBracket(lo, hi, mid, False)
        for probe in (simplest_in_interval(lo, hi), (lo + hi) / 2):
            if not lo < probe < hi:
                continue
            s = _sign(poly_eval(coeffs, probe))
            if s == 0:
                return ZeroBracket(probe, probe, probe, True)
            if s == s_lo:
                lo = probe
            else:
                hi = probe
    raise ToleranceError(f"bisection did not reach tol {tol}")


def zero_brackets(
    system: MonicOrthogonalSystem, cap: int, tol: Fraction = DEFAULT_ZERO_TOL
) -> list[ZeroBracket]:
    """The cap simple roots of p_cap, isolated via interlacing.

    Roots of consecutive orthogonal polynomials strictly interlace and all lie
    strictly inside the support hull, so the roots of p_{j-1} (plus the hull
    endpoints) bracket exactly one sign change of p_j each. Signs are evaluated
    in exact rational arithmetic, so bracketing never misfires.
    """
    if cap < 1 or cap > system.degree:
        raise DegreeCapacityError(f"need 1 <= cap <= {system.degree}, got {cap}")
    tol = Fraction(tol)
    if tol <= 0:
        raise InvalidParameterError("tol must be positive")
    lo_end = Fraction(system.measure.points[0])
    hi_end = Fraction(system.measure.points[-1])
    roots: list[ZeroBracket] = []
    for deg in range(1, cap + 1):
        cuts = [lo_end] + [r.root for r in roots] + [hi_end]
        roots = [
            _bisect_root(system.coeffs[deg], cuts[i], cuts[i + 1], tol)
            for i in range(deg)
        ]
    return roots


def zeros(
    system: MonicOrthogonalSystem, cap: int, tol: Fraction = DEFAULT_ZERO_TOL
) -> list[Fraction]:
    """Roots of p_cap as rationals within tol (exact when a probe hits one)."""
    return [b.root for b in zero_brackets(system, cap, tol)]


def gauss_weights(
    system: MonicOrthogonalSystem, cap: int, tol: Fraction = DEFAULT_ZERO_TOL
) -> list[tuple[Fraction, Fraction]]:
    """(node, lam(node)) at the roots of p_cap.

    At a root of p_cap the degree-cap kernel term vanishes, so lam there is the
    Gauss quadrature weight of the cap-point rule; the weights of a probability
    measure sum to 1.
    """
    out = []
    for b in zero_brackets(system, cap, tol):
        out.append((b.root, kernel(system, b.root, cap).lam))
    return out


def cauchy_root_bound(coeffs: Coeffs) -> Fraction:
    """1 + max |c_i| / |c_lead|: every real root lies strictly inside ±bound."""
    lead = coeffs[-1]
    if lead == 0:
        raise InvalidParameterError("leading coefficient must be nonzero")
    return 1 + max(abs(c) for c in coeffs) / abs(lead)


def kernel_polynomial(system: MonicOrthogonalSystem, x, cap: int) -> Coeffs:
    """Coefficients of t -> sum_{i<=cap} p_i(x) p_i(t) / <p_i, p_i>.

    Its zeros are the companion nodes of the quadrature rule that has a node
    preassigned at x; together with x they carry the Christoffel weights.
    """
    x = Fraction(x)
    out = [Fraction(0)] * (cap + 1)
    for i in range(cap + 1):
        scale = poly_eval(system.coeffs[i], x) / system.sqnorms[i]
        if scale:
            for idx, c in enumerate(system.coeffs[i]):
                out[idx] += scale * c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class ConstrainedQuadrature:
    """The quadrature rule with a node preassigned at x.

    Generically cap+1 points exact to degree 2 cap; when x is a zero of p_cap
    it collapses to the cap-point Gauss rule, exact to degree 2 cap - 1. Every
    weight is the Christoffel function at its node (lam_x at x itself), and
    the weights sum to 1. Companion nodes never coincide with x; they are
    split by their position relative to x, decided exactly.
    """

    x: Fraction
    lam_x: Fraction
    below: tuple[tuple[Fraction, Fraction], ...]  # (node, weight), node < x
    above: tuple[tuple[Fraction, Fraction], ...]  # (node, weight), node > x


def constrained_quadrature(
    system: MonicOrthogonalSystem, cap: int, x, tol: Fraction = DEFAULT_ZERO_TOL
) -> ConstrainedQuadrature:
    """Build the quadrature rule containing x for the degree cap.

    When p_cap(x) = 0 the rule collapses to the cap-point Gauss rule (x is a
    Gauss node); otherwise x and the companion nodes are the cap + 1 real
    zeros of a quasi-orthogonal combination of p_{cap+1} and p_cap, strictly
    separated by the zeros of p_cap. One companion node may escape the support
    hull, so the outer brackets extend to an exact root bound.
    """
    x = Fraction(x)
    lo_end = Fraction(system.measure.points[0])
    hi_end = Fraction(system.measure.points[-1])
    if x < lo_end or x > hi_end:
        raise InvalidParameterError(
            f"x = {x} lies outside the support hull [{lo_end}, {hi_end}]"
        )
    lam_x = kernel(system, x, cap).lam
    if cap == 0:
        return ConstrainedQuadrature(x=x, lam_x=lam_x, below=(), above=())
    below: list[tuple[Fraction, Fraction]] = []
    above: list[tuple[Fraction, Fraction]] = []

    def weighted(node: Fraction) -> tuple[Fraction, Fraction]:
        return node, kernel(system, node, cap).lam

    p_cap_at_x = poly_eval(system.coeffs[cap], x)
    gauss = zero_brackets(system, cap, tol)
    if p_cap_at_x == 0:
        # x is itself a Gauss node; its bracket is the one containing x.
        for br in gauss:
            if br.lo <= x <= br.hi:
                continue
            (below if br.hi < x else above).append(weighted(br.root))
    else:
        holding = 0  # index of the inter-zero interval containing x
        for br in gauss:
            if br.hi <= x:
                holding += 1
            elif br.lo < x < br.hi:
                s_x = poly_eval(system.coeffs[cap], x)
                s_lo = poly_eval(system.coeffs[cap], br.lo)
                if (s_x > 0) != (s_lo > 0):
                    holding += 1  # the bracketed zero lies left of x
        kpoly = kernel_polynomial(system, x, cap)
        bound = cauchy_root_bound(kpoly)
        cuts = [-bound] + [br.root for br in gauss] + [bound]
        for i in range(cap + 1):
            if i == holding:
                continue
            br = _bisect_root(kpoly, cuts[i], cuts[i + 1], tol)
            (below if i < holding else above).append(weighted(br.root))
    return ConstrainedQuadrature(x=x, lam_x=lam_x, below=tuple(below), above=tuple(above))


def sqrt_fraction(value: Fraction) -> tuple[Fraction | None, float]:
    """Square root of a nonnegative rational: exact Fraction when it is one,
    always with a float companion."""
    value = Fraction(value)
    if value < 0:
        raise InvalidParameterError("square root of a negative rational")
    rn, rd = isqrt(value.numerator), isqrt(value.denominator)
    if rn * rn == value.numerator and rd * rd == value.denominator:
        exact = Fraction(rn, rd)
        return exact, float(exact)
    return None, float(value) ** 0.5
