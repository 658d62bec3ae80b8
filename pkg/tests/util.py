"""Instance builders shared by the test modules."""
import math

import numpy as np

from diskstab.geometry import Disk, is_helly, translated
from diskstab.harness import InstanceSpec, make_rng, random_instance
from diskstab.lptype import lift_offset

WIDE = 2 * math.pi / 3


def lifted(family):
    dy = lift_offset(family)
    return [translated(g, 0.0, dy) for g in family], dy


def wide_pair(rng, min_angle=WIDE, max_angle=math.pi - 1e-3, between=False):
    """(d1, d2) with r1 >= r2 and lens angle in [min_angle, max_angle], random pose.

    With ``between`` the center distance is at most sqrt(3)*r1, so c2 lies
    between c1 and the companion center.
    """
    while True:
        r1 = rng.uniform(0.2, 5.0)
        r2 = r1 * rng.uniform(0.05, 1.0)
        alpha = rng.uniform(min_angle, max_angle)
        d = math.sqrt(r1 * r1 + r2 * r2 - 2 * r1 * r2 * math.cos(alpha))
        if not between or d <= math.sqrt(3) * r1:
            break
    phi = rng.uniform(0, 2 * math.pi)
    x, y = rng.uniform(-10, 10, 2)
    return Disk(x, y, r1, 0), Disk(x + d * math.cos(phi), y + d * math.sin(phi), r2, 1)


def non_helly_triples(count, start_seed=0, spread=1.0, slack=0.01):
    """Yield ``count`` non-Helly triples from the seeded generator."""
    found, seed = 0, start_seed
    while found < count:
        fam = random_instance(InstanceSpec(3, seed, spread, slack))
        seed += 1
        if not is_helly(fam):
            found += 1
            yield fam


def free_non_helly_triples(count, seed=0):
    """Non-Helly triples of pairwise intersecting disks with unconstrained centers and radii."""
    r = make_rng(seed)
    found = 0
    while found < count:
        x, y = r.uniform(0, 1, 3), r.uniform(0, 1, 3)
        rad = r.uniform(0.1, 1.0, 3)
        fam = [Disk(float(x[i]), float(y[i]), float(rad[i]), i) for i in range(3)]
        if all(math.hypot(a.cx - b.cx, a.cy - b.cy) < a.r + b.r - 1e-6
               for a, b in ((fam[0], fam[1]), (fam[0], fam[2]), (fam[1], fam[2]))) and not is_helly(fam):
            found += 1
            yield fam


def split_instance(n, seed, spread=4.0, slack=0.05):
    """A pairwise intersecting family of n disks plus one more disk meeting all of them."""
    fam = random_instance(InstanceSpec(n + 1, seed, spread, slack))
    return fam[:-1], fam[-1]


def rng(seed):
    return make_rng(seed)


def disks_through(point, n, seed):
    r = make_rng(seed)
    out = []
    for i in range(n):
        rad = r.uniform(0.5, 3.0)
        ang = r.uniform(0, 2 * math.pi)
        dist = rad * math.sqrt(r.uniform(0, 1))
        out.append(Disk(point[0] + dist * math.cos(ang), point[1] + dist * math.sin(ang), rad, i))
    return out


__all__ = ["lifted", "wide_pair", "non_helly_triples", "split_instance", "rng", "disks_through", "np"]
