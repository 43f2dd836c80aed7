"""Benchmark: compiled vs pure-Python path-order scan.

The scan is the hot loop of the brute-force recognizer; rejection requires
exhausting every order, so the negative instances below are the worst case.
Run from the repository root:

    python benchmarks/bench_ordersearch.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from latmat import catalog, ordersearch
from latmat.corpus import CorpusSpec, generate
from latmat.kernel import Matroid, direct_sum, uniform
from latmat.lpm import find_path_order


def instances() -> list[tuple[str, Matroid]]:
    out = [
        ("W3 (n=6, reject)", catalog.wheel3()),
        ("Whirl3 (n=6, reject)", catalog.whirl3()),
        ("R4 (n=7, reject)", catalog.r4()),
        ("B3,2 (n=8, reject)", catalog.b_nk(3, 2)),
        ("D4 (n=8, reject)", catalog.d_n(4)),
        ("W3+U13 (n=9, reject)", direct_sum(catalog.wheel3(), uniform(1, 3))),
        ("P4 (n=8, accept)", catalog.p_n(4)),
        ("U48 (n=8, accept)", uniform(4, 8)),
    ]
    spec = CorpusSpec(("random-transversal",), count=30, max_n=8, seed=99)
    pool = [M for M in generate(spec) if M.n == 8]
    for i, M in enumerate(pool[:4]):
        out.append((f"transversal#{i} (n=8)", M))
    return out


def time_backend(M: Matroid, backend: str, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        find_path_order(M, prune=False, max_n=9, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    have_c = ordersearch.backend_name() == "c"
    print(f"compiled backend available: {have_c}")
    header = f"{'instance':<26}{'pure (s)':>12}"
    if have_c:
        header += f"{'compiled (s)':>14}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    total_py = total_c = 0.0
    for name, M in instances():
        t_py = time_backend(M, "py", args.repeat)
        total_py += t_py
        row = f"{name:<26}{t_py:>12.4f}"
        if have_c:
            t_c = time_backend(M, "c", args.repeat)
            total_c += t_c
            row += f"{t_c:>14.4f}{t_py / t_c:>10.1f}x"
        print(row)
    if have_c:
        print("-" * len(header))
        print(f"{'total':<26}{total_py:>12.4f}{total_c:>14.4f}"
              f"{total_py / total_c:>10.1f}x")


if __name__ == "__main__":
    main()
