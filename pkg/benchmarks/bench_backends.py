"""Compare the gmpy2 and pure-Python rational backends on fixed workloads.

Each workload runs in a fresh interpreter with ``PRODMEASURE_RATIONAL`` set,
because the backend is chosen once at import.

    python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "product x500": "run_suite('product', 0, 500)",
    "additivity x60": "run_suite('additivity', 0, 60)",
    "monotonicity x200": "run_suite('monotonicity', 0, 200)",
    "sandwich fixtures": "[sandwich(n, e) for n, e in fixture_sets()]",
    "transcript": "run_transcript()",
}

SNIPPET = """
import json, time
import prodmeasure
from prodmeasure.verify import fixture_sets, run_suite, run_transcript, sandwich
best = float('inf')
for _ in range({repeat}):
    t = time.perf_counter()
    {stmt}
    best = min(best, time.perf_counter() - t)
print(json.dumps({{"backend": prodmeasure.BACKEND, "seconds": best}}))
"""


def run(backend: str, stmt: str, repeat: int) -> dict:
    env = dict(os.environ, PRODMEASURE_RATIONAL=backend)
    proc = subprocess.run([sys.executable, "-c", SNIPPET.format(stmt=stmt, repeat=repeat)],
                          capture_output=True, text=True, env=env, check=True)
    return json.loads(proc.stdout)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="best of N runs")
    args = parser.parse_args()

    print(f"{'workload':<20} {'gmpy2 (s)':>10} {'fractions (s)':>14} {'speedup':>8}")
    for name, stmt in WORKLOADS.items():
        fast = run("gmpy2", stmt, args.repeat)
        slow = run("fractions", stmt, args.repeat)
        if fast["backend"] != "gmpy2":
            print(f"{name:<20} {'n/a':>10} {slow['seconds']:>14.3f}   (gmpy2 not installed)")
            continue
        ratio = slow["seconds"] / fast["seconds"]
        print(f"{name:<20} {fast['seconds']:>10.3f} {slow['seconds']:>14.3f} {ratio:>7.2f}x")


if __name__ == "__main__":
    main()
