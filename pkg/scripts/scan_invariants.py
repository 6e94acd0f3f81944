"""Exhaustive invariant scan, one line per invariant, with per-algebra timing."""
import argparse
import json
import time

from nilcover.partition import Algebra
from nilcover.scan import DEFAULT_BOUND, ScanConfig, run_scan


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=DEFAULT_BOUND)
    ap.add_argument("--json", help="also write the summary here")
    args = ap.parse_args()
    config = ScanConfig(max_size=args.max_size)
    total = 0
    for alg in Algebra:
        t0 = time.perf_counter()
        s = run_scan(config, [alg])
        dt = time.perf_counter() - t0
        print(f"[{alg.value}] n <= {args.max_size}: {s.total_violations} violations in {dt:.2f} s")
        total += s.total_violations
    s = run_scan(config)
    data = s.to_dict()
    for name, v in data["invariants"].items():
        print(f"  {name:34s} checked {v['checked']:6d}  violations {v['violations']}")
    print("sl crepant exceptions:", data["sl_crepant_exceptions"])
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(data, fh, indent=2)
    return 1 if total else 0


if __name__ == "__main__":
    raise SystemExit(main())
