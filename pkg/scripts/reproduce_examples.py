"""Print the terminalization report for each worked case in the bundled corpus."""
import argparse

from nilcover.corpus import load_corpus, run_case
from nilcover.partition import OrbitId
from nilcover.report import render_text
from nilcover.terminalization import build
from nilcover.topology import parse_cover


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--corpus", help="corpus JSON (default: bundled)")
    args = ap.parse_args()
    failures = 0
    for case in load_corpus(args.corpus):
        orbit = OrbitId.of(case.algebra, case.partition)
        report = build(orbit, parse_cover(case.cover, orbit))
        diff = run_case(case)
        failures += bool(diff)
        print(f"== {case.name} ({'matches' if not diff else 'MISMATCH'})")
        print(render_text(report))
        for line in diff:
            print(f"   ! {line}")
        print()
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
