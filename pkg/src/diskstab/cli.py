"""Command-line entry point: ``diskstab {gen,stab,verify,pierce,lowerbound,render}``.

Exit codes: 0 success, 1 negative answer (verify failed, pierce found
nothing), 2 bad input, 3 internal verification failure, 4 size limit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import InternalVerificationFailed, StabError, TooLarge
from .fileio import FormatError, read_certificate, read_instance, write_certificate, write_instance
from .geometry import TOL
from .harness import InstanceSpec, random_instance, verify_stabbing
from .lowerbound import (
    DEFAULT_EPS1,
    DEFAULT_EPS2,
    build_lower_bound,
    construct,
    inflate,
    min_pierce,
    verify_construction,
)
from .render import render_svg
from .stabbing import stab_five, stab_five_sorted

EXIT_OK, EXIT_NO, EXIT_BAD_INPUT, EXIT_INTERNAL, EXIT_TOO_LARGE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def default_tol() -> float:
    raw = os.environ.get("STAB_TOL")
    if raw is None:
        return TOL
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"STAB_TOL must be a number, got {raw!r}") from None


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_gen(args):
    try:
        spec = InstanceSpec(args.n, args.seed, args.radius_spread, args.slack)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write(args.output, write_instance(random_instance(spec)))
    return EXIT_OK


def cmd_stab(args):
    family = read_instance(_read(args.input))
    if args.delta:
        family = inflate(family, args.delta)
    run = stab_five_sorted if args.algorithm == "sorted" else stab_five
    try:
        cert = run(family, seed=args.seed, tol=args.tol, validate=args.validate)
    except InternalVerificationFailed as exc:
        print(f"internal verification failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.delta:
        cert = type(cert)(cert.points, cert.trace, cert.seed, cert.translation, args.delta)
    _write(args.output, write_certificate(cert))
    return EXIT_OK


def cmd_verify(args):
    family = read_instance(_read(args.input))
    if not args.certificate:
        raise UsageError("verify needs --certificate")
    points, delta, _ = read_certificate(_read(args.certificate))
    if delta:
        family = inflate(family, delta)
    check = verify_stabbing(family, points, args.tol)
    if check:
        print(f"ok: {len(points)} points stab all {len(family)} objects")
        return EXIT_OK
    print(f"object {check.uncovered_id} contains no certificate point")
    return EXIT_NO


def cmd_pierce(args):
    family = read_instance(_read(args.input))
    pts = min_pierce(family, args.k, args.tol)
    if pts is None:
        _write(args.output, "NONE\n")
        return EXIT_NO
    _write(args.output, "".join(f"{p.x!r} {p.y!r}\n" for p in pts))
    return EXIT_OK


def cmd_lowerbound(args):
    if args.force:
        config = construct(args.eps1, args.eps2)
    else:
        config = build_lower_bound(args.eps1, args.eps2, args.tol)
    report = verify_construction(config, args.tol).as_dict()
    text = json.dumps(report, indent=2) + "\n"
    if args.report:
        _write(args.report, text)
    else:
        sys.stderr.write(text)
    _write(args.output, write_instance(config.objects()))
    return EXIT_OK


def cmd_render(args):
    family = read_instance(_read(args.input))
    points = []
    if args.certificate:
        points, delta, _ = read_certificate(_read(args.certificate))
        if delta:
            family = inflate(family, delta)
    _write(args.output, render_svg(family, points))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diskstab",
                                     description="Stab pairwise intersecting disks with at most five points.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inp=True):
        if inp:
            p.add_argument("--input", "-i", help="instance JSON (default: stdin)")
        p.add_argument("--output", "-o", help="output path (default: stdout)")
        p.add_argument("--tol", type=float, default=None, help="tolerance (default: STAB_TOL or 1e-9)")

    p = sub.add_parser("gen", help="write a random pairwise intersecting instance")
    common(p, inp=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--radius-spread", type=float, default=4.0)
    p.add_argument("--slack", type=float, default=0.05)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stab", help="compute a stabbing certificate")
    common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algorithm", choices=("lptype", "sorted"), default="lptype")
    p.add_argument("--validate", action="store_true", help="check pairwise intersection first")
    p.add_argument("--delta", type=float, default=0.0, help="inflate every object by this much first")
    p.set_defaults(func=cmd_stab)

    p = sub.add_parser("verify", help="check a certificate against an instance")
    common(p)
    p.add_argument("--certificate", "-c")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pierce", help="exhaustive search for at most k piercing points")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_pierce)

    p = sub.add_parser("lowerbound", help="write the 13-object lower-bound layout")
    common(p, inp=False)
    p.add_argument("--eps1", type=float, default=DEFAULT_EPS1)
    p.add_argument("--eps2", type=float, default=DEFAULT_EPS2)
    p.add_argument("--report", help="where to write the verification report (default: stderr)")
    p.add_argument("--force", action="store_true", help="write the layout even if a property fails")
    p.set_defaults(func=cmd_lowerbound)

    p = sub.add_parser("render", help="draw an instance and optional certificate as SVG")
    common(p)
    p.add_argument("--certificate", "-c")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.tol is None:
            args.tol = default_tol()
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (UsageError, FormatError, StabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
