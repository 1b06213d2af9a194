"""Command-line interface: ``torsheaf analyze|walls|iso|batch``."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .errors import InvariantViolation, TorsheafError
from .kclass import format_rational, parse_rational
from .moduli import ModuliSpace, is_isomorphic, normalized_chi
from .report import analyze, dumps, to_text
from .stability import enumerate_rank_one_walls, is_largest_wall_entry, largest_wall
from .svg import render_walls

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3
BATCH_MU_RANGE = (3, 64)
DEFAULT_MIN_RADIUS_SQ = Fraction(1, 4)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def cmd_analyze(args) -> int:
    data = analyze(args.mu, args.chi).to_json()
    sys.stdout.write(dumps(data) + "\n" if args.json else to_text(data))
    return EXIT_OK


def walls_table(mu: int, chi: int, min_radius_sq: Fraction, max_points: int) -> tuple[str, list]:
    space = ModuliSpace(mu, chi)
    rows = enumerate_rank_one_walls(space, min_radius_sq, max_points)
    top = largest_wall(space).wall
    lines = [
        f"# potential rank-one walls of N({mu}, {chi}); center {format_rational(top.center)}, "
        f"min radius^2 {format_rational(min_radius_sq)}, at most {max_points} points",
        f"{'k':>4} {'n':>4} {'radius_sq':>12}  flag",
    ]
    for wall, d in rows:
        flag = "LARGEST" if is_largest_wall_entry(space, d) else ""
        lines.append(f"{d.twist:>4} {d.points:>4} {format_rational(wall.radius_sq):>12}  {flag}".rstrip())
    return "\n".join(lines) + "\n", rows


def cmd_walls(args) -> int:
    space = ModuliSpace(args.mu, args.chi)
    max_points = args.max_points if args.max_points is not None else 2 * args.mu
    text, rows = walls_table(args.mu, args.chi, args.min_radius_sq, max_points)
    sys.stdout.write(text)
    if args.svg:
        top = largest_wall(space).wall
        svg = render_walls([w for w, _ in rows], top, title=f"walls of N({args.mu}, {args.chi})")
        path = Path(args.svg)
        try:
            path.write_text(svg, encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write SVG to {path}: {exc}", file=sys.stderr)
            return EXIT_NEGATIVE
    return EXIT_OK


def cmd_iso(args) -> int:
    verdict = is_isomorphic(args.mu1, args.chi1, args.mu2, args.chi2)
    word = "isomorphic" if verdict.isomorphic else "not isomorphic"
    print(f"{word} ({verdict.message})")
    return EXIT_OK if verdict.isomorphic else EXIT_NEGATIVE


def batch_rows(mu_max: int):
    for mu in range(BATCH_MU_RANGE[0], mu_max + 1):
        for chi in range(mu // 2 + 1):
            assert normalized_chi(mu, chi) == chi
            yield analyze(mu, chi).to_json()


def cmd_batch(args, parser) -> int:
    lo, hi = BATCH_MU_RANGE
    if not lo <= args.mu_max <= hi:
        parser.error(f"MU_MAX must be in [{lo}, {hi}], got {args.mu_max}")
    text = "".join(dumps(row) + "\n" for row in batch_rows(args.mu_max))
    path = Path(args.out)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write batch table to {path}: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torsheaf",
        description="Cones, walls and isomorphism classes of moduli of one-dimensional sheaves on P^2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full invariant report for N(MU, CHI)")
    p.add_argument("mu", type=_positive_int, metavar="MU")
    p.add_argument("chi", type=int, metavar="CHI")
    p.add_argument("--json", action="store_true", help="emit one line of JSON")

    p = sub.add_parser("walls", help="potential rank-one walls, largest first")
    p.add_argument("mu", type=int, metavar="MU", choices=range(3, 10**6))
    p.add_argument("chi", type=int, metavar="CHI")
    p.add_argument("--min-radius-sq", type=_rational, default=DEFAULT_MIN_RADIUS_SQ, metavar="P/Q")
    p.add_argument("--max-points", type=int, default=None, metavar="N", help="default 2*MU")
    p.add_argument("--svg", metavar="PATH", help="also write a diagram")

    p = sub.add_parser("iso", help="decide whether N(MU1, CHI1) and N(MU2, CHI2) are isomorphic")
    for name in ("mu1", "chi1", "mu2", "chi2"):
        p.add_argument(name, type=_positive_int if name.startswith("mu") else int, metavar=name.upper())

    p = sub.add_parser("batch", help="JSON-lines table over normalized (mu, chi), 3 <= mu <= MU_MAX")
    p.add_argument("mu_max", type=int, metavar="MU_MAX")
    p.add_argument("--out", required=True, metavar="PATH")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "walls" and args.min_radius_sq <= 0:
        parser.error("--min-radius-sq must be positive")
    if args.command == "walls" and args.max_points is not None and args.max_points < 0:
        parser.error("--max-points must be nonnegative")
    try:
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "walls":
            return cmd_walls(args)
        if args.command == "iso":
            return cmd_iso(args)
        return cmd_batch(args, parser)
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except TorsheafError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
