"""Command-line front end: ``analyze``, ``verify-corpus`` and ``scan``.

Exit codes: 0 success, 1 corpus mismatch or scan violations, 2 validation
error (or unreadable corpus), 3 strategy stuck."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .corpus import load_corpus, run_case
from .errors import NilcoverError, StrategyStuck
from .partition import Algebra, OrbitId, check_conditions
from .report import describe_base, render_text, report_to_dict
from .scan import DEFAULT_BOUND, ScanConfig, run_scan
from .slices import codim2_degenerations, terminality_verdict
from .terminalization import CANONICAL, Strategy, build
from .topology import cover_menu, fundamental_group, parse_cover

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_STUCK = 0, 1, 2, 3


def _load_steps(path: str) -> Strategy:
    """Steps file: a JSON array of ``[kind, pivot]`` pairs or of
    ``{"kind": ..., "pivot": ...}`` objects."""
    data = json.loads(Path(path).read_text())
    pairs = [(s["kind"], s["pivot"]) if isinstance(s, dict) else tuple(s) for s in data]
    return Strategy.explicit(pairs)


def _analysis(orbit: OrbitId, cover_text: Optional[str], strategy: Strategy) -> dict:
    cover = parse_cover(cover_text, orbit)
    report = build(orbit, cover, strategy)
    try:
        loci = [l.to_dict() for l in codim2_degenerations(orbit)]
    except NilcoverError:
        loci = None
    return {
        "report": report,
        "fundamental_group": fundamental_group(orbit).to_dict(),
        "conditions": check_conditions(orbit).to_dict(),
        "codim2_loci": loci,
        "cover_menu": [c.to_dict() for c in cover_menu(orbit)],
        "cover_terminality": terminality_verdict(orbit, cover).to_dict(),
        "base_description": describe_base(report),
    }


def _text(result: dict) -> str:
    g = result["fundamental_group"]
    c = result["conditions"]
    lines = [render_text(result["report"]), f"fundamental_group: {g['kind']} order {g['order']}"]
    lines.append("conditions: " + " ".join(f"{k} {c[k]}" for k in ("cond_i", "cond_ii", "cond_iii")))
    lines.append("cover_menu: " + ", ".join(f"{m['kind']} degree {m['degree']}" for m in result["cover_menu"]))
    if result["codim2_loci"] is None:
        lines.append("codim2_loci: not classified under these hypotheses")
    else:
        lines.append("codim2_loci:")
        for l in result["codim2_loci"]:
            lines.append(f"  gap {l['gap']} -> [{l['degeneration']}] slice {l['slice']}"
                         + (" (very even split)" if l["very_even_split"] else ""))
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    try:
        orbit = OrbitId.of(args.algebra, args.partition, args.label)
        strategy = CANONICAL
        if args.strategy == "explicit":
            if not args.steps:
                print("error: InvalidStrategy: --strategy explicit needs --steps", file=sys.stderr)
                return EXIT_INVALID
            strategy = _load_steps(args.steps)
        result = _analysis(orbit, args.cover, strategy)
    except StrategyStuck as exc:
        print(f"error: StrategyStuck: {exc}", file=sys.stderr)
        for s in exc.steps:
            print(f"  completed: {s.kind.value} pivot {s.pivot} -> [{s.target.partition}]", file=sys.stderr)
        return EXIT_STUCK
    except NilcoverError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.format == "json":
        out = dict(result, report=report_to_dict(result["report"]))
        print(json.dumps(out, indent=2))
    else:
        print(_text(result))
    return EXIT_OK


def cmd_verify_corpus(args) -> int:
    try:
        cases = load_corpus(args.path)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: unreadable corpus: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if not cases:
        print("warning: corpus has 0 cases", file=sys.stderr)
    failed = 0
    for case in cases:
        try:
            diff = run_case(case)
        except NilcoverError as exc:
            diff = [f"raised {type(exc).__name__}: {exc}"]
        if diff:
            failed += 1
            print(f"FAIL {case.name}")
            for line in diff:
                print(f"    {line}")
        else:
            print(f"ok   {case.name}")
    print(f"{len(cases) - failed}/{len(cases)} cases passed")
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_scan(args) -> int:
    config = ScanConfig(max_size=args.max_size, bound=args.bound)
    try:
        summary = run_scan(config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    data = summary.to_dict()
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        for name, v in data["invariants"].items():
            print(f"{name}: checked {v['checked']} violations {v['violations']}")
            for ex in v["examples"]:
                print(f"    {ex}")
        exc = ", ".join(f"([{d['partition']}], e={d['e']})" for d in data["sl_crepant_exceptions"])
        print(f"sl crepant exceptions (n <= {config.sl_crepant_max}): {{{exc}}}")
        print(f"total violations: {data['total_violations']}")
    return EXIT_MISMATCH if summary.total_violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilcover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="covers and terminalization of one orbit")
    a.add_argument("--algebra", required=True, choices=[x.value for x in Algebra])
    a.add_argument("--partition", required=True, help='Jordan type, e.g. "6^2,4^2"')
    a.add_argument("--label", choices=["+", "-"], help="label of a very even so orbit")
    a.add_argument("--cover", default="universal", help="universal | cyclic:<e> | ycover")
    a.add_argument("--strategy", default="canonical", choices=["canonical", "explicit"])
    a.add_argument("--steps", help="JSON file of [kind, pivot] pairs for --strategy explicit")
    a.add_argument("--format", default="json", choices=["json", "text"])
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify-corpus", help="check the reference corpus")
    v.add_argument("path", nargs="?", help="corpus JSON (default: the bundled one)")
    v.set_defaults(func=cmd_verify_corpus)

    s = sub.add_parser("scan", help="exhaustive invariant scan over small sizes")
    s.add_argument("--max-size", type=int, default=DEFAULT_BOUND)
    s.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    s.add_argument("--format", default="text", choices=["json", "text"])
    s.set_defaults(func=cmd_scan)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
