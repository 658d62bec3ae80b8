"""Points, disks, halfplanes and the tolerance-aware predicates on them.

All predicates use an absolute tolerance ``tol`` (default :data:`TOL`).
Halfplanes are first-class objects rather than huge disks, which keeps the
arithmetic well conditioned for tangent configurations.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import ClassVar, NamedTuple, Optional, Sequence, Union

from .errors import DegenerateIntersection, IdenticalCircles, NoLens, NotHelly

TOL = 1e-9

# Halfplane fallback points sit this far inside the boundary.
DEEP = 1e6

INF_ID = -1


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True, slots=True)
class Disk:
    cx: float
    cy: float
    r: float
    id: int = 0

    kind: ClassVar[str] = "disk"

    def __post_init__(self):
        if not (math.isfinite(self.cx) and math.isfinite(self.cy)):
            raise ValueError(f"disk {self.id}: center must be finite")
        if not (math.isfinite(self.r) and self.r > 0):
            raise ValueError(f"disk {self.id}: radius must be positive, got {self.r}")

    @property
    def center(self) -> Point:
        return Point(self.cx, self.cy)


@dataclass(frozen=True, slots=True)
class Halfplane:
    """The closed set ``{p : nx*p.x + ny*p.y <= offset}``."""

    nx: float
    ny: float
    offset: float
    id: int = 0

    kind: ClassVar[str] = "halfplane"

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.nx, self.ny, self.offset)):
            raise ValueError(f"halfplane {self.id}: values must be finite")
        if abs(math.hypot(self.nx, self.ny) - 1.0) > 1e-12:
            raise ValueError(f"halfplane {self.id}: normal must be a unit vector")


GeneralizedDisk = Union[Disk, Halfplane]

# The halfplane below the x-axis, treated as a disk of infinite radius.
D_INF = Halfplane(0.0, 1.0, 0.0, id=INF_ID)


def order_key(g: GeneralizedDisk) -> tuple:
    """Total order used everywhere for "smaller radius".

    Disks by (radius, id); halfplanes after all disks by id; ``D_INF`` last.
    The id tie-break emulates an infinitesimal perturbation of equal radii.
    """
    if g.kind == "disk":
        return (0, g.r, g.id)
    if g.id == INF_ID:
        return (2, 0.0, 0)
    return (1, 0.0, g.id)


def radius_of(g: GeneralizedDisk) -> float:
    return g.r if g.kind == "disk" else math.inf


# -- membership and distance -------------------------------------------------

def contains(g: GeneralizedDisk, p, tol: float = TOL) -> bool:
    if g.kind == "disk":
        dx = p[0] - g.cx
        dy = p[1] - g.cy
        rt = g.r + tol
        return dx * dx + dy * dy <= rt * rt
    return g.nx * p[0] + g.ny * p[1] <= g.offset + tol


def signed_distance(g: GeneralizedDisk, p) -> float:
    """Negative inside, zero on the boundary, positive outside."""
    if g.kind == "disk":
        return math.hypot(p[0] - g.cx, p[1] - g.cy) - g.r
    return g.nx * p[0] + g.ny * p[1] - g.offset


def distance_to(g: GeneralizedDisk, p) -> float:
    if contains(g, p, 0.0):
        return 0.0
    return max(0.0, signed_distance(g, p))


def objects_intersect(a: GeneralizedDisk, b: GeneralizedDisk, tol: float = TOL) -> bool:
    if a.kind == "disk" and b.kind == "disk":
        return math.hypot(a.cx - b.cx, a.cy - b.cy) <= a.r + b.r + tol
    if a.kind == "halfplane" and b.kind == "halfplane":
        cross = a.nx * b.ny - a.ny * b.nx
        if abs(cross) > 1e-15:
            return True
        # parallel boundaries: same orientation always meets
        dot = a.nx * b.nx + a.ny * b.ny
        return dot > 0 or a.offset + b.offset >= -tol
    d, h = (a, b) if a.kind == "disk" else (b, a)
    return h.nx * d.cx + h.ny * d.cy - d.r <= h.offset + tol


# -- boundary intersections --------------------------------------------------

def circle_intersection_points(a: Disk, b: Disk, tol: float = TOL) -> list:
    """Intersection points of the two boundary circles, sorted by (x, y)."""
    dx = b.cx - a.cx
    dy = b.cy - a.cy
    d = math.hypot(dx, dy)
    if d <= tol and abs(a.r - b.r) <= tol:
        raise IdenticalCircles(f"disks {a.id} and {b.id} have the same boundary")
    if d > a.r + b.r + tol or d < abs(a.r - b.r) - tol or d == 0.0:
        return []
    along = (d * d + a.r * a.r - b.r * b.r) / (2.0 * d)
    h2 = a.r * a.r - along * along
    h = math.sqrt(h2) if h2 > 0.0 else 0.0
    ux, uy = dx / d, dy / d
    mx, my = a.cx + along * ux, a.cy + along * uy
    if 2.0 * h < tol:
        return [Point(mx, my)]
    return sorted([Point(mx - h * uy, my + h * ux), Point(mx + h * uy, my - h * ux)])


def circle_line_points(d: Disk, h: Halfplane, tol: float = TOL) -> list:
    s = h.nx * d.cx + h.ny * d.cy - h.offset
    if abs(s) > d.r + tol:
        return []
    w2 = d.r * d.r - s * s
    w = math.sqrt(w2) if w2 > 0.0 else 0.0
    fx, fy = d.cx - s * h.nx, d.cy - s * h.ny
    if 2.0 * w < tol:
        return [Point(fx, fy)]
    tx, ty = -h.ny, h.nx
    return sorted([Point(fx + w * tx, fy + w * ty), Point(fx - w * tx, fy - w * ty)])


def line_line_point(g: Halfplane, h: Halfplane) -> list:
    det = g.nx * h.ny - g.ny * h.nx
    if abs(det) < 1e-15:
        return []
    x = (g.offset * h.ny - g.ny * h.offset) / det
    y = (g.nx * h.offset - g.offset * h.nx) / det
    return [Point(x, y)]


def boundary_intersections(a: GeneralizedDisk, b: GeneralizedDisk, tol: float = TOL) -> list:
    if a.kind == "disk":
        if b.kind == "disk":
            return circle_intersection_points(a, b, tol)
        return circle_line_points(a, b, tol)
    if b.kind == "disk":
        return circle_line_points(b, a, tol)
    return line_line_point(a, b)


@dataclass(frozen=True)
class Lens:
    a: Disk
    b: Disk
    vertices: tuple


def lens(a: Disk, b: Disk, tol: float = TOL) -> Lens:
    return Lens(a, b, tuple(circle_intersection_points(a, b, tol)))


def lens_angle(a: Disk, b: Disk, tol: float = TOL) -> float:
    """Angle at a boundary intersection point u between u->c_a and u->c_b."""
    dx = a.cx - b.cx
    dy = a.cy - b.cy
    d2 = dx * dx + dy * dy
    d = math.sqrt(d2)
    if d > a.r + b.r + tol or d < abs(a.r - b.r) - tol:
        raise NoLens(f"boundaries of disks {a.id} and {b.id} do not meet")
    cos_a = (a.r * a.r + b.r * b.r - d2) / (2.0 * (a.r * b.r))
    return math.acos(min(1.0, max(-1.0, cos_a)))


# -- common intersection -----------------------------------------------------

def deep_point(h: Halfplane) -> Point:
    """Closest boundary point to the origin, pushed DEEP units inside."""
    return Point((h.offset - DEEP) * h.nx, (h.offset - DEEP) * h.ny)


def candidate_points(family: Sequence[GeneralizedDisk], tol: float = TOL) -> list:
    """Pairwise boundary intersections, then disk centers, then deep points.

    A nonempty common intersection of any subfamily contains one of these:
    its boundary either carries a point where two member boundaries meet, or
    it is one member's whole boundary, in which case that member lies inside
    all the others and its center (or deep point) is common to all.
    """
    pts = []
    for a, b in combinations(family, 2):
        try:
            pts.extend(boundary_intersections(a, b, tol))
        except IdenticalCircles:
            continue
    for g in family:
        pts.append(g.center if g.kind == "disk" else deep_point(g))
    return pts


def max_excess(family: Sequence[GeneralizedDisk], p) -> float:
    return max(signed_distance(g, p) for g in family)


def intersection_witness(family: Sequence[GeneralizedDisk], tol: float = TOL) -> Optional[Point]:
    """A point in every member (within ``tol``), or None if there is none.

    Brute force over :func:`candidate_points`; cubic in ``len(family)``.
    """
    if not family:
        raise ValueError("empty family")
    best = math.inf
    for p in candidate_points(family, tol):
        if all(contains(g, p, tol) for g in family):
            return p
        best = min(best, max_excess(family, p))
    if best <= 100.0 * tol:
        raise DegenerateIntersection(
            f"closest candidate misses the family by {best:.3g}, within 100*tol"
        )
    return None


def is_helly(family: Sequence[GeneralizedDisk], tol: float = TOL) -> bool:
    if len(family) == 2:
        return objects_intersect(family[0], family[1], tol)
    return len(family) < 2 or intersection_witness(family, tol) is not None


# -- distance minimisers ------------------------------------------------------

def closest_point(g: GeneralizedDisk, target: GeneralizedDisk) -> Optional[Point]:
    """Point of ``g`` nearest to ``target``, when ``g`` alone determines it."""
    if g.kind == "disk":
        if target.kind == "halfplane":
            return Point(g.cx - g.r * target.nx, g.cy - g.r * target.ny)
        dx, dy = target.cx - g.cx, target.cy - g.cy
        d = math.hypot(dx, dy)
        if d == 0.0:
            return None
        return Point(g.cx + g.r * dx / d, g.cy + g.r * dy / d)
    if target.kind == "halfplane":
        return None
    s = g.nx * target.cx + g.ny * target.cy - g.offset
    if s <= 0.0:
        return Point(target.cx, target.cy)
    return Point(target.cx - s * g.nx, target.cy - s * g.ny)


def extreme_point_of(members: Sequence[GeneralizedDisk], destroyer: GeneralizedDisk,
                     tol: float = TOL) -> Point:
    """The point of the common intersection of ``members`` nearest ``destroyer``.

    The minimiser has one or two active constraints: with one it is that
    member's own closest point, with two it is a boundary intersection.
    """
    if not members:
        raise ValueError("no members")
    cands = []
    for g in members:
        p = closest_point(g, destroyer)
        if p is not None:
            cands.append(p)
    for a, b in combinations(members, 2):
        try:
            cands.extend(boundary_intersections(a, b, tol))
        except IdenticalCircles:
            continue
    best = None
    best_d = math.inf
    for p in cands:
        if all(contains(g, p, tol) for g in members):
            sd = signed_distance(destroyer, p)
            if sd < best_d:
                best, best_d = p, sd
    if best is None:
        raise NotHelly("members have no common point")
    return best


def extreme_point(helly: Sequence[Disk], destroyer: GeneralizedDisk, tol: float = TOL) -> Point:
    """Extreme point for one or two intersecting disks and a destroyer."""
    if not 1 <= len(helly) <= 2:
        raise ValueError("extreme_point takes one or two disks")
    if len(helly) == 2 and not objects_intersect(helly[0], helly[1], tol):
        raise NotHelly(f"disks {helly[0].id} and {helly[1].id} do not intersect")
    return extreme_point_of(helly, destroyer, tol)


# -- rigid motions ------------------------------------------------------------

def translated(g: GeneralizedDisk, dx: float, dy: float) -> GeneralizedDisk:
    if g.kind == "disk":
        return Disk(g.cx + dx, g.cy + dy, g.r, g.id)
    return Halfplane(g.nx, g.ny, g.offset + g.nx * dx + g.ny * dy, g.id)


def rotate_point(p, angle: float, about=(0.0, 0.0)) -> Point:
    c, s = math.cos(angle), math.sin(angle)
    x, y = p[0] - about[0], p[1] - about[1]
    return Point(about[0] + c * x - s * y, about[1] + s * x + c * y)


def moved(g: GeneralizedDisk, angle: float, dx: float = 0.0, dy: float = 0.0) -> GeneralizedDisk:
    """Rotate about the origin by ``angle``, then translate."""
    if g.kind == "disk":
        c = rotate_point(g.center, angle)
        return Disk(c.x + dx, c.y + dy, g.r, g.id)
    n = rotate_point((g.nx, g.ny), angle)
    norm = math.hypot(n.x, n.y)
    nx, ny = n.x / norm, n.y / norm
    return Halfplane(nx, ny, g.offset + nx * dx + ny * dy, g.id)
