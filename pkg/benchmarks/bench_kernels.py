"""Timing comparison of the compiled and pure-numpy kernel backends.

Runs every hot kernel on identical random inputs under each available
backend, checks that the results agree, and prints per-kernel timings
with the compiled/python speedup.  The backend used by the library
itself is chosen at import time; set GREYLEAP_KERNELS=python or
GREYLEAP_KERNELS=compiled before launching to time a full optimizer
run under one backend:

    GREYLEAP_KERNELS=python  python benchmarks/bench_kernels.py --end-to-end
    GREYLEAP_KERNELS=compiled python benchmarks/bench_kernels.py --end-to-end
"""

import argparse
import time

import numpy as np

from greyleap import kernels


def _time_call(fn, args, repeats):
    """Best wall-clock seconds over ``repeats`` calls."""
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def _agree(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return a.shape == b.shape and np.array_equal(a, b)


def bench_kernels(sizes, repeats):
    rng = np.random.default_rng(0)
    backends = kernels.available_backends()
    impls = {name: kernels.get_backend(name) for name in backends}
    print(f"available backends: {', '.join(backends)} (library uses {kernels.BACKEND})")
    header = f"{'kernel':22s} {'N':>5s} {'M':>2s}"
    for name in backends:
        header += f" {name + ' (ms)':>14s}"
    if len(backends) == 2:
        header += f" {'speedup':>8s}"
    print(header)
    print("-" * len(header))

    for n in sizes:
        for m in (2, 3):
            F = rng.random((n, m))
            ref = np.full(m, 1.1)
            capacity = max(2, n // 2)
            cases = [
                ("nondominated_ranks", lambda impl, F=F: impl.nondominated_ranks(F)),
                ("crowding_distances", lambda impl, F=F: impl.crowding_distances(F)),
                (
                    "truncate_by_crowding",
                    lambda impl, F=F, c=capacity: impl.truncate_by_crowding(F, c),
                ),
            ]
            if m == 2:
                cases.append(("hv2d", lambda impl, F=F, r=ref: impl.hv2d(F, r)))
            for label, call in cases:
                results = {name: call(impls[name]) for name in backends}
                first = results[backends[0]]
                for name in backends[1:]:
                    if not _agree(first, results[name]):
                        raise AssertionError(
                            f"{label} backends disagree at N={n} M={m}"
                        )
                times = {
                    name: _time_call(call, (impls[name],), repeats)
                    for name in backends
                }
                line = f"{label:22s} {n:5d} {m:2d}"
                for name in backends:
                    line += f" {times[name] * 1e3:14.3f}"
                if len(backends) == 2:
                    line += f" {times['python'] / times['compiled']:8.1f}x"
                print(line)


def bench_end_to_end(repeats):
    from greyleap.optimizer import AlgorithmParams, run
    from greyleap.problems import get_problem

    params = AlgorithmParams(max_fitness_evals=5000)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        run(get_problem("ZDT1"), params, seed=0)
        best = min(best, time.perf_counter() - start)
    print(
        f"ZDT1, 5000 evaluations, backend={kernels.BACKEND}: {best * 1e3:.1f} ms"
    )


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes",
        type=int,
        nargs="+",
        default=[100, 300, 1000],
        help="population sizes to benchmark",
    )
    parser.add_argument(
        "--repeats", type=int, default=5, help="timing repetitions (best is kept)"
    )
    parser.add_argument(
        "--end-to-end",
        action="store_true",
        help="also time one optimizer run under the active backend",
    )
    args = parser.parse_args()
    bench_kernels(args.sizes, args.repeats)
    if args.end_to_end:
        bench_end_to_end(max(2, args.repeats // 2))


if __name__ == "__main__":
    main()
