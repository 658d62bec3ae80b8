"""A 13-object family of pairwise intersecting disks and halfplanes designed to
resist piercing by three points, plus an exhaustive small-k piercing checker.

Layout: A is the unit disk at the origin; D1, D2, D3 have radius
R = 3 + 2*sqrt(3) and touch A and each other, D1 straight up and the others
counterclockwise.  For each Di the two outer common tangents of A and Di bound
halfplanes Ti-, Ti+ that avoid the interior of A.  Ai is A grown to radius
1 + eps1 while touching Di at xi_i, then rolled clockwise along Di without
slipping until it has turned through eps2; its center then sweeps the angle
eps2 * (1 + eps1) / R about the center of Di.

The checker is the arbiter.  For this layout it finds a 3-point piercing:
the point where T1- touches A lies in A and every Ai, the tangency point of
D1 and D3 lies in T2- and T2+, and D2, T1+, T3-, T3+ share an open region.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields
from itertools import combinations
from typing import Optional, Sequence

from .errors import BadEpsilons, DegenerateIntersection, InvalidInstance, TooLarge
from .geometry import (
    TOL,
    Disk,
    GeneralizedDisk,
    Halfplane,
    Point,
    candidate_points,
    contains,
    intersection_witness,
    objects_intersect,
    rotate_point,
)

R_BIG = 3.0 + 2.0 * math.sqrt(3.0)
ANGLES = (math.pi / 2, math.pi / 2 + 2 * math.pi / 3, math.pi / 2 + 4 * math.pi / 3)
MAX_OBJECTS = 20
MAX_K = 4
# with eps1 = 1e-2 the grown disks reach the Dj/Tk overlaps just outside A
DEFAULT_EPS1 = 5e-3
DEFAULT_EPS2 = 5e-4


@dataclass(frozen=True)
class LowerBoundConfig:
    A: Disk
    D: tuple
    T_minus: tuple
    T_plus: tuple
    A_inner: tuple
    xi: tuple
    eps1: float
    eps2: float

    def objects(self) -> list:
        """All 13 objects ordered by id."""
        objs = [self.A, *self.D, *self.T_minus, *self.T_plus, *self.A_inner]
        return sorted(objs, key=lambda g: g.id)

    def nine(self, i: int) -> list:
        """The nine objects other than the A-type disks, grouped per index."""
        return [g for j in range(3) for g in (self.D[j], self.T_minus[j], self.T_plus[j])]

    def tangency_points(self) -> list:
        """Where D_i, T_i- and T_i+ touch the boundary of A."""
        pts = list(self.xi)
        for h in (*self.T_minus, *self.T_plus):
            pts.append(Point(-h.nx, -h.ny))
        return pts

    def replace(self, **changes) -> "LowerBoundConfig":
        vals = {f.name: getattr(self, f.name) for f in fields(self)}
        vals.update(changes)
        return LowerBoundConfig(**vals)


def _tangent_halfplane(angle: float, ident: int) -> Halfplane:
    # boundary touches the unit circle at angle; the halfplane lies outside it
    return Halfplane(-math.cos(angle), -math.sin(angle), -1.0, ident)


def construct(eps1: float, eps2: float) -> LowerBoundConfig:
    """Build the configuration without validating the parameters."""
    A = Disk(0.0, 0.0, 1.0, 0)
    # outer tangent normal m satisfies m . c_D = 1 - R with |c_D| = 1 + R
    theta = math.acos((1.0 - R_BIG) / (1.0 + R_BIG))
    D, Tm, Tp, Ai, xi = [], [], [], [], []
    for i, phi in enumerate(ANGLES):
        u = (math.cos(phi), math.sin(phi))
        cd = ((1.0 + R_BIG) * u[0], (1.0 + R_BIG) * u[1])
        D.append(Disk(cd[0], cd[1], R_BIG, 1 + i))
        xi.append(Point(u[0], u[1]))
        Tm.append(_tangent_halfplane(phi - theta, 4 + 2 * i))
        Tp.append(_tangent_halfplane(phi + theta, 5 + 2 * i))
        grown = (-eps1 * u[0], -eps1 * u[1])
        rolled = rotate_point(grown, -eps2 * (1.0 + eps1) / R_BIG, about=cd)
        Ai.append(Disk(rolled.x, rolled.y, 1.0 + eps1, 10 + i))
    return LowerBoundConfig(A, tuple(D), tuple(Tm), tuple(Tp), tuple(Ai), tuple(xi), eps1, eps2)


@dataclass(frozen=True)
class ConstructionReport:
    pairwise_intersecting: bool
    tangencies: bool
    intersects_all: tuple      # property (i), per A_i
    regions_disjoint: tuple    # property (ii), per A_i
    xi_outside: tuple          # property (iii), per A_i
    tangency_points_distinct: bool
    d_triple_non_helly: bool
    t_minus_non_helly: bool
    t_plus_non_helly: bool
    d_t_t_non_helly: tuple     # {D_i, T_i-, T_i+}, per i

    @property
    def ok(self) -> bool:
        return not self.failures()

    def failures(self) -> list:
        bad = []
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, tuple):
                bad.extend(f"{f.name}[{i + 1}]" for i, x in enumerate(v) if not x)
            elif not v:
                bad.append(f.name)
        return bad

    def as_dict(self) -> dict:
        out = {f.name: (list(getattr(self, f.name)) if isinstance(getattr(self, f.name), tuple)
                        else getattr(self, f.name)) for f in fields(self)}
        out["ok"] = self.ok
        return out


def _empty(objs, tol) -> bool:
    try:
        return intersection_witness(objs, tol) is None
    except DegenerateIntersection:
        return False


def verify_construction(config: LowerBoundConfig, tol: float = TOL) -> ConstructionReport:
    objs = config.objects()
    pairwise = all(objects_intersect(a, b, tol) for a, b in combinations(objs, 2))

    A, D = config.A, config.D
    scale = 1.0 + R_BIG
    tang = True
    for i in range(3):
        da = math.hypot(D[i].cx - A.cx, D[i].cy - A.cy)
        tang &= abs(da - (A.r + D[i].r)) <= tol * scale
        x = config.xi[i]
        tang &= abs(math.hypot(x.x - A.cx, x.y - A.cy) - A.r) <= tol
        tang &= abs(math.hypot(x.x - D[i].cx, x.y - D[i].cy) - D[i].r) <= tol * scale
        for j in range(i + 1, 3):
            dd = math.hypot(D[i].cx - D[j].cx, D[i].cy - D[j].cy)
            tang &= abs(dd - (D[i].r + D[j].r)) <= tol * scale

    inter, disjoint, outside = [], [], []
    for i, Ai in enumerate(config.A_inner):
        others = [g for g in objs if g.id != Ai.id]
        inter.append(all(objects_intersect(Ai, g, tol) for g in others))
        nine = config.nine(i)
        disjoint.append(all(_empty([Ai, x, y], tol) for x, y in combinations(nine, 2)))
        outside.append(not contains(Ai, config.xi[i], tol))

    tp = config.tangency_points()
    distinct = all(math.hypot(p.x - q.x, p.y - q.y) > 10 * tol for p, q in combinations(tp, 2))

    return ConstructionReport(
        pairwise_intersecting=pairwise,
        tangencies=bool(tang),
        intersects_all=tuple(inter),
        regions_disjoint=tuple(disjoint),
        xi_outside=tuple(outside),
        tangency_points_distinct=distinct,
        d_triple_non_helly=_empty(list(D), tol),
        t_minus_non_helly=_empty(list(config.T_minus), tol),
        t_plus_non_helly=_empty(list(config.T_plus), tol),
        d_t_t_non_helly=tuple(_empty([D[i], config.T_minus[i], config.T_plus[i]], tol)
                              for i in range(3)),
    )


def build_lower_bound(eps1: float = DEFAULT_EPS1, eps2: float = DEFAULT_EPS2, tol: float = TOL) -> LowerBoundConfig:
    """Validated construction; raises BadEpsilons unless every property holds."""
    if not (0 < eps1 <= 0.05 and 0 < eps2 <= eps1 / 5):
        raise BadEpsilons(f"need 0 < eps1 <= 0.05 and 0 < eps2 <= eps1/5, got {eps1}, {eps2}")
    config = construct(eps1, eps2)
    report = verify_construction(config, tol)
    if not report.ok:
        raise BadEpsilons("construction fails: " + ", ".join(report.failures()))
    return config


def inflate(family: Sequence[GeneralizedDisk], delta: float) -> list:
    """Grow every disk radius and halfplane offset by ``delta``."""
    out = []
    for g in family:
        if g.kind == "disk":
            out.append(Disk(g.cx, g.cy, g.r + delta, g.id))
        else:
            out.append(Halfplane(g.nx, g.ny, g.offset + delta, g.id))
    return out


# -- exhaustive piercing ----------------------------------------------------------

def coverage_table(family: Sequence[GeneralizedDisk], tol: float = TOL):
    """Candidate points with their coverage bitmasks, one entry per distinct mask.

    Any point piercing a subfamily S can be replaced by a candidate piercing
    S: the common intersection of S has either a boundary point where two
    member boundaries meet, or a single member boundary, in which case that
    member lies inside the rest and its center or deep point works.
    Masks that are strict subsets of another mask are dropped.
    """
    seen = {}
    for p in candidate_points(family, tol):
        mask = 0
        for bit, g in enumerate(family):
            if contains(g, p, tol):
                mask |= 1 << bit
        if mask and mask not in seen:
            seen[mask] = p
    masks = list(seen)
    keep = [m for m in masks if not any(m != o and m & o == m for o in masks)]
    return [(seen[m], m) for m in keep]


def min_pierce(family: Sequence[GeneralizedDisk], k: int, tol: float = TOL) -> Optional[list]:
    """At most ``k`` points piercing every member, or None if impossible.

    Exact set cover over the candidate table by branch and bound: branch on
    the uncovered member with the fewest covering candidates.  Deterministic
    for a given family order.
    """
    family = list(family)
    if len(family) > MAX_OBJECTS or not 1 <= k <= MAX_K:
        raise TooLarge(f"min_pierce handles at most {MAX_OBJECTS} objects and 1 <= k <= {MAX_K}")
    for a, b in combinations(family, 2):
        if not objects_intersect(a, b, tol):
            raise InvalidInstance(f"objects {a.id} and {b.id} are disjoint")
    table = coverage_table(family, tol)
    full = (1 << len(family)) - 1
    biggest = max((bin(m).count("1") for _, m in table), default=0)
    covering = [[j for j, (_, m) in enumerate(table) if m >> bit & 1] for bit in range(len(family))]

    def search(covered, left):
        if covered == full:
            return []
        if left == 0 or biggest * left < bin(full & ~covered).count("1"):
            return None
        open_bits = [b for b in range(len(family)) if not covered >> b & 1]
        bit = min(open_bits, key=lambda b: len(covering[b]))
        for j in covering[bit]:
            rest = search(covered | table[j][1], left - 1)
            if rest is not None:
                return [j] + rest
        return None

    picks = search(0, k)
    if picks is None:
        return None
    return [table[j][0] for j in picks]
