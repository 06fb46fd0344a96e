"""Compare the compiled scan kernels against the pure-Python twins.

Times the single-box and pair-box grid scans at a few resolutions and
prints per-call timings plus the speedup.  Run from a checkout:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --resolutions 101,201,401 --repeats 30
"""

import argparse
import random
import time

from causabound import _kernels_py

try:
    from causabound import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def time_call(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def random_box(rng):
    p0 = rng.random()
    p1 = rng.random()
    return p0, p1, max(0.0, p0 + p1 - 1.0), min(p0, p1)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--resolutions",
        default="51,101,201",
        help="comma-separated grid resolutions (default 51,101,201)",
    )
    parser.add_argument(
        "--repeats", type=int, default=20, help="timing repeats, best-of (default 20)"
    )
    parser.add_argument("--seed", type=int, default=0, help="box generator seed")
    args = parser.parse_args()
    resolutions = [int(r) for r in args.resolutions.split(",")]

    rng = random.Random(args.seed)
    pm = random_box(rng)
    pr = random_box(rng)
    single_args = (pr[1], pr[2], pr[3])
    pair_args = pm + pr

    backends = [("python", _kernels_py)]
    if _kernels_c is not None:
        backends.append(("compiled", _kernels_c))
    else:
        print("compiled backend not built; timing the pure backend only")

    header = f"{'kernel':<12}{'resolution':>11}" + "".join(
        f"{name:>14}" for name, _ in backends
    )
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)

    for resolution in resolutions:
        for label, make_args in (
            ("scan_single", lambda: single_args + (resolution,)),
            ("scan_pair", lambda: pair_args + (resolution,)),
        ):
            row = f"{label:<12}{resolution:>11}"
            timings = []
            for _, module in backends:
                fn = getattr(module, label)
                call_args = make_args()
                result = fn(*call_args)
                timings.append(time_call(fn, call_args, args.repeats))
                del result
            row += "".join(f"{t * 1e6:>12.1f}us" for t in timings)
            if len(timings) == 2:
                row += f"{timings[0] / timings[1]:>9.1f}x"
            print(row)

    if len(backends) == 2:
        check = []
        for label in ("scan_single", "scan_pair"):
            a = getattr(_kernels_py, label)
            b = getattr(_kernels_c, label)
            call_args = (single_args if label == "scan_single" else pair_args) + (
                resolutions[-1],
            )
            check.append(a(*call_args) == b(*call_args))
        print("backends agree bit-for-bit:", all(check))


if __name__ == "__main__":
    main()
