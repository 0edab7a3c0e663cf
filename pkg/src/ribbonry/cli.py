"""Command-line front end: count, enumerate, sample, render, graph, verify.

Exit codes: 0 success (a count of zero is success), 1 domain failure such as
sampling an untileable region, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .enumeration import (
    NotTileableError,
    count_tilings,
    enumerate_tilings,
    log2_big,
    sample_tiling,
)
from .region import Region, RegionParseError, Tiling, build_aztec, build_rectangle, build_stair, parse_region
from .render import tiling_to_ascii, tiling_to_svg
from .sheffield import ResourceLimitError, build_graph, to_dot
from .verify import FAIL, SKIPPED, SUITE_NAMES, run_suite


class UsageError(Exception):
    """Bad flag values or region specs; reported with exit code 2."""


def _parse_rect(text: str) -> tuple[int, int]:
    rows, sep, cols = text.partition("x")
    if not sep:
        raise UsageError(f"--rect wants ROWSxCOLS, got {text!r}")
    try:
        return int(rows), int(cols)
    except ValueError:
        raise UsageError(f"--rect wants integers, got {text!r}") from None


def _parse_kv(flag: str, text: str, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict[str, int]:
    out: dict[str, int] = {}
    for part in text.split(","):
        key, sep, value = part.partition("=")
        key = key.strip()
        if not sep or key not in required + optional:
            wanted = ",".join(f"{k}=…" for k in required + optional)
            raise UsageError(f"{flag} wants {wanted}, got {text!r}")
        try:
            out[key] = int(value)
        except ValueError:
            raise UsageError(f"{flag}: {key} must be an integer, got {value!r}") from None
    missing = [k for k in required if k not in out]
    if missing:
        raise UsageError(f"{flag} is missing {', '.join(missing)}")
    return out


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _resolve_region(args: argparse.Namespace) -> tuple[Region, int]:
    """Build the region named by the flags and settle the ribbon length."""
    chosen = [name for name in ("rect", "aztec", "stair", "grid") if getattr(args, name)]
    if len(chosen) != 1:
        raise UsageError("exactly one of --rect, --aztec, --stair, --grid is required")
    source = chosen[0]
    embedded: int | None = None
    try:
        if source == "rect":
            rows, cols = _parse_rect(args.rect)
            region = build_rectangle(rows, cols)
        elif source == "aztec":
            kv = _parse_kv("--aztec", args.aztec, required=("N", "n"), optional=("k",))
            embedded = kv["n"]
            region = build_aztec(kv["N"], kv["n"], kv.get("k", 0))
        elif source == "stair":
            kv = _parse_kv("--stair", args.stair, required=("M", "n"))
            embedded = kv["n"]
            region = build_stair(kv["M"], kv["n"])
        else:
            region = parse_region(_read_text(args.grid))
    except RegionParseError as exc:
        raise UsageError(f"--grid: {exc}") from None
    except ValueError as exc:
        raise UsageError(f"--{source}: {exc}") from None
    n = args.n if args.n is not None else embedded
    if n is None:
        raise UsageError(f"--n is required with --{source}")
    if embedded is not None and args.n is not None and args.n != embedded:
        raise UsageError(f"--n {args.n} conflicts with n={embedded} in --{source}")
    if n < 1:
        raise UsageError(f"ribbon length must be positive, got {n}")
    return region, n


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, separators=(",", ":")))


def cmd_count(args: argparse.Namespace) -> int:
    region, n = _resolve_region(args)
    count = count_tilings(region, n, memo_limit=args.memo_limit, threads=args.threads)
    tiles = region.area // n if region.area % n == 0 else None
    ent = log2_big(count) / tiles if count and tiles else None
    if args.format == "text":
        print(f"count: {count}")
        print(f"tiles: {'-' if tiles is None else tiles}")
        print(f"entropy: {'-' if ent is None else format(ent, '.6f')}")
    else:
        _print_json({"count": str(count), "tiles": tiles, "entropy": ent})
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    region, n = _resolve_region(args)
    for tiling in enumerate_tilings(region, n):
        if args.format == "text":
            print(tiling_to_ascii(tiling))
            print()
        else:
            print(tiling.to_json())
    return 0


def cmd_sample(args: argparse.Namespace) -> int:
    region, n = _resolve_region(args)
    tiling = sample_tiling(region, n, args.seed)
    if args.format == "text":
        print(tiling_to_ascii(tiling))
    else:
        print(tiling.to_json())
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    text = _read_text(args.infile)
    try:
        tiling = Tiling.from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: not a tiling: {exc}", file=sys.stderr)
        return 1
    print(tiling_to_svg(tiling) if args.format == "svg" else tiling_to_ascii(tiling))
    return 0


def cmd_graph(args: argparse.Namespace) -> int:
    region, n = _resolve_region(args)
    graph = build_graph(region, n)
    if args.format == "json":
        _print_json(graph.to_json_dict())
    else:
        print(to_dot(graph))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    growth_cases = None
    if any(getattr(args, name) for name in ("rect", "aztec", "stair", "grid")):
        if args.suite not in ("growth", "all"):
            raise UsageError("region flags apply only to the growth suite")
        region, n = _resolve_region(args)
        growth_cases = [(f"region n={n}", region, n)]
    checks = run_suite(args.suite, free_edge_limit=args.free_edge_limit, growth_cases=growth_cases)
    failed = sum(c.status == FAIL for c in checks)
    skipped = sum(c.status == SKIPPED for c in checks)
    passed = len(checks) - failed - skipped
    if args.format == "text":
        for check in checks:
            if check.status == FAIL:
                print(f"FAIL {check.name}: expected {check.expected} ({check.source}), got {check.actual}")
            elif check.status == SKIPPED:
                print(f"SKIP {check.name}: {check.actual}")
            else:
                print(f"PASS {check.name}: {check.actual} ({check.source})")
        print(f"{passed} passed, {failed} failed, {skipped} skipped")
    else:
        _print_json(
            {
                "suite": args.suite,
                "ok": failed == 0,
                "passed": passed,
                "failed": failed,
                "skipped": skipped,
                "checks": [c.to_json_dict() for c in checks],
            }
        )
    return 1 if failed else 0


def _add_region_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("region (pick one)")
    group.add_argument("--rect", metavar="ROWSxCOLS", help="rectangle, e.g. 3x6")
    group.add_argument("--aztec", metavar="N=..,n=..[,k=..]", help="Aztec-diamond analogue")
    group.add_argument("--stair", metavar="M=..,n=..", help="stair region with M rows of length n")
    group.add_argument("--grid", metavar="PATH", help="grid file of '#' and '.' ('-' for stdin)")
    parser.add_argument("--n", type=int, help="ribbon length (implied by --aztec/--stair)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ribbonry",
        description="Exact counting, enumeration, and uniform sampling of ribbon tilings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="count tilings and report per-tile entropy")
    _add_region_flags(count)
    count.add_argument("--threads", type=int, default=1, help="worker threads for counting")
    count.add_argument("--memo-limit", type=int, metavar="BYTES", help="cap memo table memory")
    count.add_argument("--format", choices=("json", "text"), default="json")
    count.set_defaults(func=cmd_count)

    enum = sub.add_parser("enumerate", help="stream every tiling, one JSON object per line")
    _add_region_flags(enum)
    enum.add_argument("--format", choices=("json", "text"), default="json")
    enum.set_defaults(func=cmd_enumerate)

    sample = sub.add_parser("sample", help="draw one tiling exactly uniformly at random")
    _add_region_flags(sample)
    sample.add_argument("--seed", type=int, default=0)
    sample.add_argument("--format", choices=("json", "text"), default="json")
    sample.set_defaults(func=cmd_sample)

    render = sub.add_parser("render", help="render a tiling JSON file as SVG or ASCII")
    render.add_argument("--in", dest="infile", default="-", metavar="PATH", help="tiling JSON ('-' for stdin)")
    render.add_argument("--format", choices=("svg", "text"), default="svg")
    render.set_defaults(func=cmd_render)

    graph = sub.add_parser("graph", help="emit the tile adjacency graph as DOT or JSON")
    _add_region_flags(graph)
    graph.add_argument("--format", choices=("dot", "json"), default="dot")
    graph.set_defaults(func=cmd_graph)

    verify = sub.add_parser("verify", help="run a self-check suite and report each check")
    verify.add_argument("suite", choices=SUITE_NAMES)
    _add_region_flags(verify)
    verify.add_argument("--free-edge-limit", type=int, default=30, metavar="EDGES")
    verify.add_argument("--format", choices=("json", "text"), default="json")
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotTileableError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1


if __name__ == "__main__":
    sys.exit(main())
