"""Five stabbing points for pairwise intersecting disks, with an LP-type solver,
a 13-object lower-bound layout and an exhaustive piercing checker."""
from .errors import *  # noqa: F401,F403
from .geometry import D_INF, TOL, Disk, Halfplane, Point
from .harness import InstanceSpec, random_instance, verify_stabbing
from .kernels import BACKEND
from .lowerbound import build_lower_bound, construct, inflate, min_pierce, verify_construction
from .lptype import solve, weight_brute
from .stabbing import StabCertificate, four_point_set, stab_five, stab_five_sorted

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "D_INF", "TOL", "Disk", "Halfplane", "InstanceSpec", "Point", "StabCertificate",
    "build_lower_bound", "construct", "four_point_set", "inflate", "min_pierce", "random_instance",
    "solve", "stab_five", "stab_five_sorted", "verify_construction", "verify_stabbing", "weight_brute",
]
