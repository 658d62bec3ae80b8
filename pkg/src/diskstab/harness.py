"""Seeded instance generation and end-to-end stabbing verification."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.spatial import ConvexHull

from .geometry import TOL, Disk, GeneralizedDisk, contains

PERTURB = 1e-12
_BRUTE_PAIRS = 3000


@dataclass(frozen=True)
class InstanceSpec:
    n: int
    seed: int = 0
    radius_spread: float = 4.0
    slack: float = 0.05

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not self.slack > 0:
            raise ValueError("slack must be positive")
        if not self.radius_spread >= 1:
            raise ValueError("radius_spread must be >= 1")


def make_rng(seed: int) -> np.random.Generator:
    """Counter-based Philox stream: the same seed gives the same draws everywhere."""
    return np.random.Generator(np.random.Philox(seed))


def _max_ratio(x, y, r, rows, cols, chunk=512):
    best = 0.0
    cx, cy, cr = x[cols], y[cols], r[cols]
    for s in range(0, len(rows), chunk):
        i = rows[s:s + chunk]
        d = np.hypot(x[i, None] - cx[None, :], y[i, None] - cy[None, :])
        best = max(best, float((d / (r[i, None] + cr[None, :])).max()))
    return best


def overlap_scale(x, y, r) -> float:
    """max over pairs of |c_i c_j| / (r_i + r_j), computed exactly.

    Large inputs are pruned: a pair can only beat the current bound ``lam`` if
    both ends satisfy ``far_i >= lam * (r_i + r_min)``, where ``far_i`` is the
    distance to the farthest center (always a hull vertex).
    """
    x, y, r = (np.asarray(v, dtype=float) for v in (x, y, r))
    n = len(x)
    if n < 2:
        return 0.0
    everyone = np.arange(n)
    if n <= _BRUTE_PAIRS:
        return _max_ratio(x, y, r, everyone, everyone)
    try:
        hull = ConvexHull(np.column_stack([x, y])).vertices
    except Exception:  # collinear or otherwise flat input
        return _max_ratio(x, y, r, everyone, everyone)
    seeds = np.union1d(hull, np.argsort(r, kind="stable")[:64])
    lam = _max_ratio(x, y, r, seeds, seeds)
    far = np.zeros(n)
    for s in range(0, n, 8192):
        d = np.hypot(x[s:s + 8192, None] - x[hull][None, :], y[s:s + 8192, None] - y[hull][None, :])
        far[s:s + 8192] = d.max(axis=1)
    viable = np.flatnonzero(far >= lam * (r + r.min()) * (1 - 1e-12))
    return max(lam, _max_ratio(x, y, r, viable, viable))


def random_arrays(spec: InstanceSpec):
    """Centers and radii of :func:`random_instance` as numpy arrays."""
    rng = make_rng(spec.seed)
    x = rng.random(spec.n)
    y = rng.random(spec.n)
    raw = rng.uniform(1.0, spec.radius_spread, spec.n)
    lam = overlap_scale(x, y, raw)
    r = raw * lam * (1.0 + spec.slack) if lam > 0 else raw.copy()
    r += PERTURB * np.arange(1, spec.n + 1)
    return x, y, r


def random_instance(spec: InstanceSpec) -> list:
    """Pairwise intersecting disks with positive-area lenses and distinct radii."""
    x, y, r = random_arrays(spec)
    return [Disk(float(a), float(b), float(c), i) for i, (a, b, c) in enumerate(zip(x, y, r))]


@dataclass(frozen=True)
class StabCheck:
    ok: bool
    uncovered_id: Optional[int] = None

    def __bool__(self):
        return self.ok


def verify_stabbing(family: Sequence[GeneralizedDisk], points, tol: float = TOL) -> StabCheck:
    """True iff every member contains at least one of ``points``."""
    points = list(points)
    for g in family:
        if not any(contains(g, p, tol) for p in points):
            return StabCheck(False, g.id)
    return StabCheck(True)
