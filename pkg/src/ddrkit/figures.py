"""Figure rendering for the report paths.

Each helper draws one figure from an already-computed report structure and
writes it to a file; nothing here recomputes mathematics. Rendering is
optional (opt in via the CLI --figures flag) so the default report path stays
data-only.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .asymptotics import BerryEsseenRow, LimitCheck
from .bounds import BoundReport, FixedPointBoundPoint
from .orthopoly import MonicOrthogonalSystem


def _finish(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_bound_figure(report: BoundReport, path, title: str = "") -> Path:
    """Step c.d.f.s of the design and the space with the lam(x) tube around
    the space c.d.f., plus the per-point gap."""
    xs = [float(p.x) for p in report.points]
    f_d = [float(p.f_d) for p in report.points]
    f_x = [float(p.f_x) for p in report.points]
    lam = [float(p.lam) for p in report.points]
    gap = [float(p.gap) for p in report.points]

    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(7, 7), sharex=True)
    ax1.step(xs, f_d, where="post", label="design c.d.f.", lw=1.8)
    ax1.step(xs, f_x, where="post", label="space c.d.f.", lw=1.8)
    lo = [max(0.0, v - w) for v, w in zip(f_x, lam)]
    hi = [min(1.0, v + w) for v, w in zip(f_x, lam)]
    ax1.fill_between(xs, lo, hi, step="post", alpha=0.2, label="space c.d.f. ± λ")
    ax1.set_ylabel("cumulative probability")
    ax1.legend(loc="lower right", fontsize=8)
    if title:
        ax1.set_title(title, fontsize=10)

    ax2.plot(xs, gap, "o-", ms=4, label="|gap|")
    ax2.plot(xs, lam, "s--", ms=4, label="λ(x)")
    ax2.set_xlabel("distance threshold x")
    ax2.set_ylabel("bound vs gap")
    ax2.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    return _finish(fig, Path(path))


def render_fixed_point_figure(points: list[FixedPointBoundPoint], path, title: str = "") -> Path:
    xs = [float(p.x) for p in points]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.step(xs, [float(p.g_d) for p in points], where="post", label="group fixed-point c.d.f.")
    ax.step(xs, [p.poisson for p in points], where="post", label="Poisson(1) c.d.f.")
    ax.plot(xs, [p.gap for p in points], "o-", ms=4, label="|gap|")
    ax.plot(xs, [float(p.bound) for p in points], "s--", ms=4, label="bound")
    ax.set_xlabel("fixed-point threshold x")
    ax.legend(fontsize=8)
    if title:
        ax.set_title(title, fontsize=10)
    fig.tight_layout()
    return _finish(fig, Path(path))


def render_hahn_figure(check: LimitCheck, path) -> Path:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    ax1.plot(check.ladder, check.observed, "o-", label="normalized value")
    ax1.axhline(check.limit, color="k", ls="--", lw=1, label="limit")
    ax1.set_xlabel("groundset size")
    ax1.set_ylabel(f"degree-{check.k} normalized value")
    ax1.legend(fontsize=8)
    ax2.loglog(check.ladder, check.errors, "o-")
    ax2.set_xlabel("groundset size")
    ax2.set_ylabel("absolute error")
    fig.suptitle(f"k={check.k}, p={check.p}, x={check.x}", fontsize=10)
    fig.tight_layout()
    return _finish(fig, Path(path))


def render_berry_esseen_figure(rows: list[BerryEsseenRow], path) -> Path:
    ns = [r.n for r in rows]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    ax1.plot(ns, [r.gap for r in rows], "o-", ms=3)
    ax1.set_xlabel("n")
    ax1.set_ylabel("sup |binomial c.d.f. − normal c.d.f.|")
    ax2.plot(ns, [r.scaled for r in rows], "o-", ms=3)
    ax2.axhline(1.0, color="k", ls="--", lw=1)
    ax2.set_xlabel("n")
    ax2.set_ylabel("gap · √n")
    fig.tight_layout()
    return _finish(fig, Path(path))


def _horner_float(coeffs, x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + float(c)
    return acc


def render_orthopoly_figure(system: MonicOrthogonalSystem, path, samples: int = 257) -> Path:
    """Monic polynomial curves over the support hull with the measure weights."""
    lo = system.measure.points[0]
    hi = system.measure.points[-1]
    xs = [lo + (hi - lo) * i / (samples - 1) for i in range(samples)]
    fig, (ax1, ax2) = plt.subplots(2, 1, figsize=(7, 6), sharex=True)
    ax1.bar(system.measure.points, [float(w) for w in system.measure.weights],
            width=0.12, color="gray", label="measure weight")
    ax1.set_ylabel("weight")
    ax1.legend(fontsize=8)
    for i in range(1, system.degree + 1):
        norm = float(system.sqnorms[i]) ** 0.5
        ax2.plot(xs, [_horner_float(system.coeffs[i], x) / norm for x in xs],
                 lw=1.2, label=f"degree {i}")
    ax2.axhline(0, color="k", lw=0.6)
    ax2.set_xlabel("x")
    ax2.set_ylabel("orthonormal value")
    ax2.legend(fontsize=7, ncol=2)
    fig.tight_layout()
    return _finish(fig, Path(path))
