"""Compare the compiled and pure-Python signed-permutation kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json]

Times group enumeration and inversion counting over whole Weyl groups.
The compiled column is skipped when the extension has not been built.
"""
from __future__ import annotations

import argparse
import json
import time

from fcrweyl._kernels import compiled_backend, python_backend
from fcrweyl.rootsys import build

SYSTEMS = [("B", 4), ("D", 5), ("A", 6), ("C", 5)]


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_backend(mod, rs, repeat: int) -> dict:
    gens = rs.simple_reflection_images()
    elements, _ = mod.enumerate_bfs(gens, 10**7)
    pos = rs.positive_roots

    def lengths():
        for w in elements:
            mod.count_negative(w, pos)

    def inversions():
        for w in elements:
            mod.negative_indices(w, pos)

    def products():
        for w in elements:
            mod.compose(w, mod.invert(w))

    return {
        "enumerate": _best(lambda: mod.enumerate_bfs(gens, 10**7), repeat),
        "lengths": _best(lengths, repeat),
        "inversions": _best(inversions, repeat),
        "compose_invert": _best(products, repeat),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="print raw timings as JSON")
    args = ap.parse_args()

    rows = []
    for kind, n in SYSTEMS:
        rs = build(kind, n)
        py = bench_backend(python_backend, rs, args.repeat)
        cy = bench_backend(compiled_backend, rs, args.repeat) if compiled_backend else None
        for task in py:
            rows.append({
                "system": rs.label,
                "order": rs.group_order(),
                "task": task,
                "python_s": py[task],
                "compiled_s": cy[task] if cy else None,
            })
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'system':<7}{'|W|':>7}  {'task':<15}{'python':>10}{'compiled':>10}{'speedup':>9}")
    for r in rows:
        cy = r["compiled_s"]
        cy_txt = f"{cy:10.4f}" if cy is not None else f"{'-':>10}"
        sp_txt = f"{r['python_s'] / cy:8.1f}x" if cy else f"{'-':>9}"
        print(f"{r['system']:<7}{r['order']:>7}  {r['task']:<15}{r['python_s']:10.4f}{cy_txt}{sp_txt}")


if __name__ == "__main__":
    main()
