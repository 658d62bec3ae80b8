"""Five stabbing points for pairwise intersecting disks.

Pipeline: find the smallest destroyer D and a non-Helly triple containing it,
stab everything ordered before D with one point q, and cover everything else
with four points built from the widest lens of the triple.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .errors import HellyTriple, InternalVerificationFailed, InvalidInstance, PreconditionViolated
from .geometry import (
    TOL,
    Disk,
    GeneralizedDisk,
    Point,
    contains,
    intersection_witness,
    lens_angle,
    order_key,
)
from .harness import verify_stabbing
from .lptype import Helly, solve

WIDE = 2.0 * math.pi / 3.0
ANGLE_SLACK = 1e-9
SQRT3 = math.sqrt(3.0)
COMPANION_ID = -2


@dataclass(frozen=True)
class StabTrace:
    helly_point: Optional[Point] = None
    triple: Optional[tuple] = None
    wide_pair: Optional[tuple] = None
    lens_angle: Optional[float] = None
    companion: Optional[Disk] = None
    four_points: Optional[tuple] = None


@dataclass(frozen=True)
class StabCertificate:
    points: tuple
    trace: StabTrace = field(default_factory=StabTrace)
    seed: int = 0
    translation: float = 0.0
    delta: float = 0.0


def widest_lens_pair(triple: Sequence[Disk], tol: float = TOL, check: bool = False):
    """The pair of the triple with the largest lens angle, as (d1, d2, angle).

    Ties (within 1e-12) go to the lexicographically smallest id pair.
    """
    if len(triple) != 3:
        raise ValueError("need exactly three disks")
    if check and intersection_witness(triple, tol) is not None:
        raise HellyTriple("the triple has a common point")
    best = None
    for a, b in combinations(triple, 2):
        a, b = sorted((a, b), key=lambda g: g.id)
        ang = lens_angle(a, b, tol)
        ids = (a.id, b.id)
        if best is None or ang > best[2] + 1e-12 or (abs(ang - best[2]) <= 1e-12 and ids < best[3]):
            best = (a, b, ang, ids)
    return best[0], best[1], best[2]


def companion_disk(d1: Disk, d2: Disk, tol: float = TOL) -> Disk:
    """Disk of radius r1 on the ray c1->c2 whose lens angle with d1 is 2pi/3."""
    if d1.r < d2.r:
        raise PreconditionViolated("companion_disk needs radius(d1) >= radius(d2)")
    if lens_angle(d1, d2, tol) < WIDE - ANGLE_SLACK:
        raise PreconditionViolated("lens angle of d1 and d2 is below 2pi/3")
    dx, dy = d2.cx - d1.cx, d2.cy - d1.cy
    d = math.hypot(dx, dy)
    if d == 0.0:
        raise PreconditionViolated("concentric disks have no direction")
    s = SQRT3 * d1.r / d
    return Disk(d1.cx + s * dx, d1.cy + s * dy, d1.r, COMPANION_ID)


def four_point_set(d1: Disk, d2: Disk, tol: float = TOL):
    """Points {c1, c, p, q} hitting every disk of radius >= r1 that meets d1 and d2.

    Returns ``(points, companion)``.  In the frame centered at the midpoint of
    c1 and c with the x-axis along c1->c, p = (0, -r1) and q = (0, r1).
    """
    e = companion_disk(d1, d2, tol)
    ux, uy = (e.cx - d1.cx) / (SQRT3 * d1.r), (e.cy - d1.cy) / (SQRT3 * d1.r)
    mx, my = 0.5 * (d1.cx + e.cx), 0.5 * (d1.cy + e.cy)
    r = d1.r
    p = Point(mx + r * uy, my - r * ux)
    q = Point(mx - r * uy, my + r * ux)
    return (Point(d1.cx, d1.cy), Point(e.cx, e.cy), p, q), e


def _far_points(family):
    """Three far points that together lie in every halfplane of ``family``.

    For any unit normal n one of three directions 120 degrees apart has
    n.u <= -1/2, so a point at distance 2*max|offset| + 1 along it qualifies.
    """
    rho = 2.0 * max(abs(g.offset) for g in family if g.kind == "halfplane") + 1.0
    return tuple(Point(rho * math.cos(a), rho * math.sin(a))
                 for a in (math.pi / 2, math.pi / 2 + WIDE, math.pi / 2 + 2 * WIDE))


def _finish(family, triple, destroyer, q, tol, debug, check_triple=False):
    """Build the certificate points once the triple and q are known."""
    if destroyer.kind == "halfplane":
        # everything ordered after a halfplane is a halfplane
        far = _far_points(family)
        return (q,) + far, StabTrace(helly_point=q, triple=tuple(triple), four_points=None)
    a, b, ang = widest_lens_pair(triple, tol, check=check_triple)
    d1, d2 = sorted((a, b), key=order_key, reverse=True)
    pts, e = four_point_set(d1, d2, tol)
    trace = StabTrace(helly_point=q, triple=tuple(triple), wide_pair=(d1, d2),
                      lens_angle=ang, companion=e, four_points=pts)
    return pts + (q,), trace


def _verified(family, cert, tol, debug):
    if debug:
        check = verify_stabbing(family, cert.points, tol)
        if not check:
            raise InternalVerificationFailed(
                f"object {check.uncovered_id} contains none of the certificate points",
                check.uncovered_id,
            )
    return cert


def _prefix_point(family, destroyer, seed, tol):
    key = order_key(destroyer)
    prefix = [g for g in family if order_key(g) < key]
    out = solve(prefix, seed, tol)
    if not isinstance(out.verdict, Helly):
        raise InternalVerificationFailed("objects ordered before the smallest destroyer are not Helly")
    return out.verdict.point


def stab_five(family: Sequence[GeneralizedDisk], seed: int = 0, tol: float = TOL,
              debug: bool = True, validate: bool = False) -> StabCertificate:
    """At most five points stabbing a pairwise intersecting family, via the LP-type solver."""
    family = list(family)
    out = solve(family, seed, tol, validate=validate)
    if isinstance(out.verdict, Helly):
        v = out.verdict.point
        cert = StabCertificate((v,), StabTrace(helly_point=v), seed, out.translation)
        return _verified(family, cert, tol, debug)
    triple = out.verdict.triple
    destroyer = out.verdict.smallest_destroyer
    q = _prefix_point(family, destroyer, seed + 1, tol)
    pts, trace = _finish(family, triple, destroyer, q, tol, debug, check_triple=debug)
    return _verified(family, StabCertificate(pts, trace, seed, out.translation), tol, debug)


def stab_five_sorted(family: Sequence[GeneralizedDisk], seed: int = 0, tol: float = TOL,
                     debug: bool = True, validate: bool = False) -> StabCertificate:
    """Same certificate shape as :func:`stab_five`, found by sorting and binary search.

    O(n log n): the solver is only used as a Helly oracle on prefixes.
    """
    fam = sorted(family, key=order_key)
    n = len(fam)
    if n == 0:
        raise InvalidInstance("empty family")

    def helly(objs):
        return isinstance(solve(objs, seed, tol).verdict, Helly)

    first = solve(fam, seed, tol, validate=validate)
    if isinstance(first.verdict, Helly):
        v = first.verdict.point
        cert = StabCertificate((v,), StabTrace(helly_point=v), seed, first.translation)
        return _verified(fam, cert, tol, debug)

    # smallest m with fam[:m] non-Helly
    lo, hi = 1, n
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if helly(fam[:mid]):
            lo = mid
        else:
            hi = mid
    istar = hi - 1
    d = fam[istar]
    # smallest k with {d} + fam[:k] non-Helly
    lo, hi = 1, istar
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if helly(fam[:mid] + [d]):
            lo = mid
        else:
            hi = mid
    dk = fam[hi - 1]
    triple = None
    for j in range(hi - 1):
        if intersection_witness([fam[j], dk, d], tol) is None:
            triple = (fam[j], dk, d)
            break
    if triple is None:
        raise InternalVerificationFailed("linear search found no non-Helly triple")
    q_out = solve(fam[:istar], seed + 1, tol)
    if not isinstance(q_out.verdict, Helly):
        raise InternalVerificationFailed("prefix before the destroyer is not Helly")
    pts, trace = _finish(fam, triple, d, q_out.verdict.point, tol, debug, check_triple=debug)
    return _verified(fam, StabCertificate(pts, trace, seed, first.translation), tol, debug)
