"""JSON instance and certificate files.

Floats go through :mod:`json`, which writes the shortest decimal that reads
back to the same double, so identical inputs give byte-identical files.
"""
from __future__ import annotations

import json
import math

from .geometry import Disk, Halfplane, Point
from .stabbing import StabCertificate, StabTrace


class FormatError(ValueError):
    """The document does not match the expected schema."""


def _number(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FormatError(f"{where}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise FormatError(f"{where}: number must be finite")
    return value


def _record(obj, keys, where):
    if not isinstance(obj, dict):
        raise FormatError(f"{where}: expected an object")
    extra = set(obj) - set(keys)
    missing = set(keys) - set(obj)
    if extra:
        raise FormatError(f"{where}: unknown keys {sorted(extra)}")
    if missing:
        raise FormatError(f"{where}: missing keys {sorted(missing)}")
    return [_number(obj[k], f"{where}.{k}") for k in keys]


def parse_instance(doc) -> list:
    """Family from a decoded instance document.

    Disks get ids 0..m-1 in file order, halfplanes continue from m.  A
    halfplane normal only needs to be nonzero; it is normalized here.
    """
    if not isinstance(doc, dict):
        raise FormatError("instance: expected a JSON object")
    extra = set(doc) - {"disks", "halfplanes"}
    if extra:
        raise FormatError(f"instance: unknown keys {sorted(extra)}")
    disks = doc.get("disks", [])
    halfplanes = doc.get("halfplanes", [])
    if not isinstance(disks, list) or not isinstance(halfplanes, list):
        raise FormatError("instance: 'disks' and 'halfplanes' must be lists")
    family = []
    for i, d in enumerate(disks):
        cx, cy, r = _record(d, ("cx", "cy", "r"), f"disks[{i}]")
        try:
            family.append(Disk(cx, cy, r, len(family)))
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    for i, h in enumerate(halfplanes):
        nx, ny, off = _record(h, ("nx", "ny", "offset"), f"halfplanes[{i}]")
        norm = math.hypot(nx, ny)
        if norm == 0.0:
            raise FormatError(f"halfplanes[{i}]: normal must be nonzero")
        family.append(Halfplane(nx / norm, ny / norm, off / norm, len(family)))
    if not family:
        raise FormatError("instance: needs at least one disk or halfplane")
    return family


def instance_doc(family) -> dict:
    disks = [g for g in family if g.kind == "disk"]
    halfplanes = [g for g in family if g.kind == "halfplane"]
    doc = {"disks": [{"cx": g.cx, "cy": g.cy, "r": g.r} for g in sorted(disks, key=lambda g: g.id)]}
    if halfplanes:
        doc["halfplanes"] = [{"nx": g.nx, "ny": g.ny, "offset": g.offset}
                             for g in sorted(halfplanes, key=lambda g: g.id)]
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None


def read_instance(text: str) -> list:
    return parse_instance(loads(text))


def write_instance(family) -> str:
    return dumps(instance_doc(family))


# -- certificates ---------------------------------------------------------------

def _pt(p):
    return None if p is None else {"x": float(p[0]), "y": float(p[1])}


def _ids(objs):
    return None if objs is None else [g.id for g in objs]


def trace_doc(trace: StabTrace) -> dict:
    e = trace.companion
    return {
        "helly_point": _pt(trace.helly_point),
        "triple": _ids(trace.triple),
        "wide_pair": _ids(trace.wide_pair),
        "lens_angle": trace.lens_angle,
        "companion": None if e is None else {"cx": e.cx, "cy": e.cy, "r": e.r},
        "four_points": None if trace.four_points is None else [_pt(p) for p in trace.four_points],
    }


def certificate_doc(cert: StabCertificate) -> dict:
    return {
        "points": [_pt(p) for p in cert.points],
        "trace": trace_doc(cert.trace),
        "delta": float(cert.delta),
        "seed": int(cert.seed),
        "translation": {"dy": float(cert.translation)},
    }


def write_certificate(cert: StabCertificate) -> str:
    return dumps(certificate_doc(cert))


def parse_certificate(doc):
    """Points, delta and seed from a decoded certificate; the trace is not re-parsed."""
    if not isinstance(doc, dict):
        raise FormatError("certificate: expected a JSON object")
    keys = {"points", "trace", "delta", "seed", "translation"}
    if set(doc) != keys:
        raise FormatError(f"certificate: keys must be exactly {sorted(keys)}")
    pts = doc["points"]
    if not isinstance(pts, list) or not 1 <= len(pts) <= 5:
        raise FormatError("certificate: 'points' must hold 1 to 5 points")
    points = [Point(*_record(p, ("x", "y"), f"points[{i}]")) for i, p in enumerate(pts)]
    delta = _number(doc["delta"], "delta")
    if delta < 0:
        raise FormatError("delta must be non-negative")
    seed = doc["seed"]
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise FormatError("seed must be an integer")
    _record(doc["translation"], ("dy",), "translation")
    return points, delta, seed


def read_certificate(text: str):
    return parse_certificate(loads(text))
