"""Compare the compiled and pure-Python kernels on the search hot paths.

    python3 benchmarks/bench_backends.py [--order 6] [--repeat 3]
"""

import argparse
import time

from metdim._backend import available


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    n = args.order
    total = 1 << (n * (n - 1) // 2)
    kernels = available()
    # class representatives, shared by both backends
    py = kernels["python"]
    _, classes = py.scan_range(n, 0, total, True)
    rows = [py.rows_from_mask(n, m) for m in classes]

    tasks = {
        f"scan n={n} labeled": lambda k: k.scan_range(n, 0, total, False),
        f"scan n={n} dedup": lambda k: k.scan_range(n, 0, total, True),
    }
    for code, name in enumerate(("metric", "edge", "mixed", "strong")):
        tasks[f"solve {name} x{len(rows)}"] = (
            lambda k, code=code: [k.solve_rows(r, n, code, 1) for r in rows]
        )

    names = sorted(kernels)
    print(f"{'task':<24}" + "".join(f"{b:>12}" for b in names) + ("     speedup" if len(names) == 2 else ""))
    for label, fn in tasks.items():
        t = {b: best_of(lambda: fn(kernels[b]), args.repeat) for b in names}
        line = f"{label:<24}" + "".join(f"{t[b]:>11.3f}s" for b in names)
        if len(names) == 2:
            line += f"{t['python'] / t['cython']:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
