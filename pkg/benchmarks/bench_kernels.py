"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--samples 40]

Each workload runs on the same seeded graphs under both backends; the
results are checked for equality before timings are reported.
"""

from __future__ import annotations

import argparse
import sys
import time
import warnings

from pathfactors import kernels
from pathfactors.kernels import _pykernels as pure
from pathfactors.theorems import random_graphs, remark1_family, remark2_family


def workloads(samples: int):
    dense = [list(g.masks) for g in random_graphs(12, 14, samples, seed=1)]
    mid = [list(g.masks) for g in random_graphs(9, 11, samples, seed=2)]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        families = [list(remark1_family(1, 1, 4).masks), list(remark2_family(1, 1, 1).masks)]
    return [
        ("kaneko_search n=12..14", "kaneko_search", dense),
        ("binding_search n=9..11", "binding_search", mid),
        ("isolated_search n=12..14", "isolated_search", dense),
        ("path_factor_search n=12..14", "path_factor_search", dense),
        ("path_factor_search families", "path_factor_search", families),
    ]


def run(module, func: str, graphs, repeat: int):
    fn = getattr(module, func)
    best = float("inf")
    results = None
    for _ in range(repeat):
        start = time.perf_counter()
        results = [fn(adj, len(adj)) for adj in graphs]
        best = min(best, time.perf_counter() - start)
    return best, results


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--samples", type=int, default=40)
    args = parser.parse_args(argv)
    if kernels.compiled is None:
        print("compiled extension not available; build it with `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'workload':32} {'python (s)':>11} {'compiled (s)':>13} {'speedup':>8}")
    for label, func, graphs in workloads(args.samples):
        t_py, r_py = run(pure, func, graphs, args.repeat)
        t_c, r_c = run(kernels.compiled, func, graphs, args.repeat)
        if func == "path_factor_search":
            same = [a is None for a in r_py] == [b is None for b in r_c]
        else:
            same = r_py == r_c
        if not same:
            print(f"{label}: backends disagree", file=sys.stderr)
            return 2
        print(f"{label:32} {t_py:11.4f} {t_c:13.4f} {t_py / max(t_c, 1e-9):7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
