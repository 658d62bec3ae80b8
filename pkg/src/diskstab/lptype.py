"""LP-type formulation of "find the smallest destroyer".

The weight of a family C is ``(rad(C), -dist(C))`` ordered lexicographically:
``rad`` is the radius of the smallest destroyer (the first object, in
:func:`~diskstab.geometry.order_key` order, that makes the prefix before it
non-Helly; ``D_INF`` when C is Helly) and ``dist`` the distance from that
prefix's common intersection to the destroyer.  A candidate basis B is then
violated by E exactly when the extreme point of B misses E, which is what the
compiled scanner checks in bulk.

Families may contain halfplanes.  Their intersections need not be bounded
below, so the solver then evaluates every set together with a fixed *anchor*:
the smallest disk of the family.  Adding a fixed constraint to every set keeps
the three LP-type axioms, and the final answer is unchanged because the
anchor belongs to the family anyway.
"""
from __future__ import annotations

import enum
import logging
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Union

import numpy as np

from . import kernels
from .errors import Degenerate, InvalidInstance, NotHelly
from .geometry import (
    D_INF,
    TOL,
    Disk,
    GeneralizedDisk,
    Point,
    closest_point,
    contains,
    distance_to,
    extreme_point_of,
    intersection_witness,
    objects_intersect,
    order_key,
    radius_of,
    translated,
)

log = logging.getLogger(__name__)

INF_KEY = order_key(D_INF)
MARGIN = 1.0
BRUTE_LIMIT = 12


@dataclass(frozen=True)
class Weight:
    rad: float
    neg_dist: float
    key: tuple = INF_KEY  # order key of the destroyer; decides ``rad`` exactly

    def compare(self, other: "Weight", tol: float = TOL) -> int:
        if self.key != other.key:
            return -1 if self.key < other.key else 1
        if abs(self.neg_dist - other.neg_dist) <= tol:
            return 0
        return -1 if self.neg_dist < other.neg_dist else 1

    def equals(self, other: "Weight", tol: float = TOL) -> bool:
        return self.compare(other, tol) == 0

    @property
    def is_helly(self) -> bool:
        return self.key == INF_KEY


EMPTY_WEIGHT = Weight(math.inf, 0.0, INF_KEY)


@dataclass(frozen=True)
class Basis:
    disks: tuple
    weight: Weight
    destroyer: GeneralizedDisk
    extreme_point: Optional[Point]


@dataclass(frozen=True)
class Helly:
    point: Point


@dataclass(frozen=True)
class NonHelly:
    triple: tuple
    smallest_destroyer: GeneralizedDisk


@dataclass(frozen=True)
class SolveOutcome:
    weight: Weight
    basis: Basis
    verdict: Union[Helly, NonHelly]
    translation: float = 0.0  # dy added to the input before solving
    violations: int = 0


class Violation(enum.Enum):
    NOT_A_BASIS = "not a basis"
    VIOLATES = "violates"
    NO_VIOLATION = "no violation"


# -- weights of small sets ----------------------------------------------------

def evaluate(objs: Sequence[GeneralizedDisk], tol: float = TOL) -> Basis:
    """Weight, smallest destroyer and extreme point of a small family.

    The returned ``Basis`` carries the evaluated objects, not a minimal subset.
    """
    objs = tuple(sorted(objs, key=order_key))
    if not objs:
        return Basis((), EMPTY_WEIGHT, D_INF, None)
    end = len(objs)
    destroyer = D_INF
    for k in range(1, len(objs)):
        if k == 1:
            ok = objects_intersect(objs[0], objs[1], tol)
            if not ok:
                raise InvalidInstance(f"objects {objs[0].id} and {objs[1].id} are disjoint")
        else:
            ok = intersection_witness(objs[: k + 1], tol) is not None
        if not ok:
            destroyer = objs[k]
            end = k
            break
    v = extreme_point_of(objs[:end], destroyer, tol)
    key = order_key(destroyer)
    w = Weight(radius_of(destroyer), -distance_to(destroyer, v), key)
    return Basis(objs, w, destroyer, v)


def _minimal_subset(pool, target: Weight, extra=(), must=None, tol=TOL, cache=None):
    """Smallest subset T of ``pool`` (|T| <= 3) with weight(T + extra) == target."""
    pool = sorted(pool, key=order_key)
    extra = tuple(extra)
    passes = [True, False] if must is not None else [False]
    for require in passes:
        for size in range(0 if extra else 1, min(3, len(pool)) + 1):
            for combo in combinations(pool, size):
                if require and must not in combo:
                    continue
                try:
                    b = _cached_evaluate(combo + extra, tol, cache)
                except NotHelly:
                    continue  # halfplanes alone: no lowest point
                if b.weight.equals(target, tol):
                    return combo, b
    return None, None


def _cached_evaluate(objs, tol, cache):
    if cache is None:
        return evaluate(objs, tol)
    key = tuple(sorted(g.id for g in objs))
    b = cache.get(key)
    if b is None:
        b = evaluate(objs, tol)
        cache[key] = b
    return b


def make_basis(disks: Sequence[GeneralizedDisk], tol: float = TOL, anchor=None, cache=None) -> Basis:
    """Evaluate ``disks`` (plus the anchor, if any) and keep ``disks`` as members."""
    extra = (anchor,) if anchor is not None and anchor not in disks else ()
    b = _cached_evaluate(tuple(disks) + extra, tol, cache)
    return Basis(tuple(sorted(disks, key=order_key)), b.weight, b.destroyer, b.extreme_point)


def weight_brute(family: Sequence[Disk], tol: float = TOL) -> tuple:
    """Weight and a minimal basis of ``family`` by definition (test oracle).

    Scans the radius-sorted prefixes with the brute-force Helly oracle and then
    enumerates every subset of size <= 3.
    """
    family = list(family)
    if len(family) > BRUTE_LIMIT:
        raise ValueError(f"weight_brute is limited to {BRUTE_LIMIT} objects")
    for a, b in combinations(family, 2):
        if not objects_intersect(a, b, tol):
            raise InvalidInstance(f"objects {a.id} and {b.id} are disjoint")
    full = evaluate(family, tol)
    combo, sub = _minimal_subset(family, full.weight, tol=tol)
    if combo is None:
        raise Degenerate("no subset of size <= 3 reproduces the family weight")
    return full.weight, Basis(combo, sub.weight, sub.destroyer, sub.extreme_point)


# -- violation test and basis extension ---------------------------------------

def violation_test(candidate: Sequence[Disk], e: Disk, tol: float = TOL) -> Violation:
    """Constant-time violation test for a candidate basis of disks."""
    B = list(candidate)
    if len(B) > 3:
        return Violation.NOT_A_BASIS
    if not B:
        return Violation.VIOLATES
    if len(B) == 3:
        if intersection_witness(B, tol) is not None:
            return Violation.NOT_A_BASIS
        B.sort(key=order_key)
        d = B[2]
        if order_key(e) >= order_key(d):
            return Violation.NO_VIOLATION
        v = extreme_point_of(B[:2], d, tol)
    elif len(B) == 2:
        for g, other in ((B[0], B[1]), (B[1], B[0])):
            low = closest_point(g, D_INF)
            if contains(other, low, tol):
                if not contains(other, low, -10 * tol):
                    log.debug("basis pair %s/%s decided within 10*tol of a boundary", g.id, other.id)
                return Violation.NOT_A_BASIS
        v = extreme_point_of(B, D_INF, tol)
    else:
        v = closest_point(B[0], D_INF)
    return Violation.NO_VIOLATION if contains(e, v, tol) else Violation.VIOLATES


def extend_basis(basis: Basis, violator: GeneralizedDisk, tol: float = TOL,
                 anchor=None, cache=None) -> Basis:
    """Basis of ``basis.disks + {violator}`` by subset enumeration.

    With an anchor, weights are those of each subset joined with the anchor;
    the anchor itself is never listed as a member.
    """
    pool = [g for g in basis.disks if g != violator and g != anchor]
    if violator != anchor:
        pool.append(violator)
    extra = (anchor,) if anchor is not None else ()
    target = _cached_evaluate(tuple(pool) + extra, tol, cache).weight
    combo, sub = _minimal_subset(pool, target, extra, must=violator, tol=tol, cache=cache)
    if combo is None:
        raise Degenerate("basis extension found no subset with the target weight")
    return Basis(combo, sub.weight, sub.destroyer, sub.extreme_point)


# -- the solver ---------------------------------------------------------------

def _columns(family):
    n = len(family)
    a = np.empty(n)
    b = np.empty(n)
    c = np.empty(n)
    kind = np.zeros(n, dtype=np.uint8)
    ident = np.empty(n, dtype=np.int64)
    for i, g in enumerate(family):
        if g.kind == "disk":
            a[i], b[i], c[i] = g.cx, g.cy, g.r
        else:
            a[i], b[i], c[i] = g.nx, g.ny, g.offset
            kind[i] = 1
        ident[i] = g.id
    return a, b, c, kind, ident


def _disk_columns(family):
    n = len(family)
    a = np.fromiter((g.cx for g in family), float, n)
    b = np.fromiter((g.cy for g in family), float, n)
    c = np.fromiter((g.r for g in family), float, n)
    ident = np.fromiter((g.id for g in family), np.int64, n)
    return a, b, c, np.zeros(n, dtype=np.uint8), ident


def validate_family(family: Sequence[GeneralizedDisk], tol: float = TOL) -> None:
    """Raise InvalidInstance unless ids are unique and all pairs intersect (O(n^2))."""
    ids = [g.id for g in family]
    if len(set(ids)) != len(ids):
        raise InvalidInstance("object ids must be unique")
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            if not objects_intersect(family[i], family[j], tol):
                raise InvalidInstance(f"objects {family[i].id} and {family[j].id} are disjoint")


def lift_offset(family: Sequence[GeneralizedDisk]) -> float:
    """Vertical shift putting every disk at least MARGIN above the x-axis."""
    low = min(g.cy - g.r for g in family if g.kind == "disk")
    return MARGIN - low


def solve(family: Sequence[GeneralizedDisk], seed: int = 0, tol: float = TOL,
          validate: bool = False, backend: Optional[str] = None) -> SolveOutcome:
    """Weight, basis and Helly verdict of ``family`` in expected linear time.

    Randomised incremental Sharir-Welzl recursion over a seeded shuffle: when
    object i violates the current basis, the basis is extended by brute force
    and the prefix before i is re-solved from it.  Reported points are in the
    input frame; the weight is in the lifted frame (see ``translation``).
    """
    family = list(family)
    n = len(family)
    if n == 0:
        raise InvalidInstance("empty family")
    if validate:
        validate_family(family, tol)
    all_disks = all(g.kind == "disk" for g in family)
    if not all_disks and not any(g.kind == "disk" for g in family):
        raise InvalidInstance("the family needs at least one disk")
    dy = lift_offset(family)

    perm = np.random.Generator(np.random.Philox(seed)).permutation(n)
    cols = _disk_columns(family) if all_disks else _columns(family)
    a, b, c, kind, ident = (col[perm] for col in cols)
    # disks move up by dy; a halfplane's offset grows by ny * dy
    c = c + np.where(kind == 1, b * dy, 0.0)
    b = b + np.where(kind == 0, dy, 0.0)
    scanner = kernels.scanner_class(backend)(a, b, c, kind, ident, tol)

    lifted = {}

    def obj(i):
        g = lifted.get(i)
        if g is None:
            g = translated(family[perm[i]], 0.0, dy)
            lifted[i] = g
        return g

    cache = {}
    anchor = None
    if all_disks:
        B = make_basis((obj(0),), tol, cache=cache)
    else:
        disk_pos = np.flatnonzero(kind == 0)
        order = np.lexsort((ident[disk_pos], c[disk_pos]))
        anchor = obj(int(disk_pos[order[0]]))
        B = make_basis((), tol, anchor=anchor, cache=cache)

    budget = 20 * n + 1000
    violations = 0
    stack = [[n, 0]]
    while stack:
        frame = stack[-1]
        dkind, dr, did = B.weight.key
        v = B.extreme_point
        i = scanner.first_violator(frame[1], frame[0], v[0], v[1], dkind, dr, did)
        if i < 0:
            stack.pop()
            continue
        violations += 1
        if violations > budget:
            raise Degenerate("solver exceeded its violation budget; input too degenerate")
        B = extend_basis(B, obj(i), tol, anchor=anchor, cache=cache)
        frame[1] = i + 1
        if i > 0:
            stack.append([i, 0])

    members = B.disks
    if anchor is not None:
        full = _cached_evaluate(members + (anchor,), tol, cache)
        combo, sub = _minimal_subset(members + (anchor,), full.weight, must=anchor, tol=tol)
        if combo is None:
            raise Degenerate("could not reduce the anchored basis")
        B = Basis(combo, sub.weight, sub.destroyer, sub.extreme_point)

    back = {g.id: family[perm[i]] for i, g in lifted.items()}
    orig = tuple(back[m.id] for m in B.disks)
    if B.weight.is_helly:
        v = B.extreme_point
        verdict = Helly(Point(v.x, v.y - dy))
        basis = Basis(orig, B.weight, D_INF, verdict.point)
    else:
        destroyer = back[B.destroyer.id]
        ev = B.extreme_point
        basis = Basis(orig, B.weight, destroyer, Point(ev.x, ev.y - dy))
        verdict = NonHelly(orig, destroyer)
    return SolveOutcome(B.weight, basis, verdict, dy, violations)
