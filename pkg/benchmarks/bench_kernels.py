"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--n-max 200]

Times raw kernel calls (Newton sweeps, series recurrences) and one
end-to-end pipeline, then checks the two backends agree.
"""

import argparse
import math
import timeit

import numpy as np

from resonances import _kernels
from resonances.expansion import generic_pole_approx
from resonances.models import TripleDelta, Winter
from resonances.oracle import exact_pole


def newton_sweep(k, model, seeds):
    code, args = model.kernel_code, model.kernel_args()
    return [k.newton(code, *args, s, 1e-13, 50, math.pi, 20) for s in seeds]


def series_ops(k, s, t):
    k.series_mul(s, t)
    k.series_div(s, t)
    k.series_log(t, complex(np.log(t[0])))
    u = s.copy()
    u[0] = 0
    k.series_exp(u, 1.0)
    k.series_sqrt(t, complex(np.sqrt(t[0])))


def pipeline(model, n_max):
    for n in range(1, n_max + 1):
        for b in model.branches:
            exact_pole(model, n, b)


def bench(fn, repeat):
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--n-max", type=int, default=200)
    ap.add_argument("--order", type=int, default=32, help="series length for the recurrence benchmark")
    args = ap.parse_args()

    backends = _kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend not built; timing the pure-Python kernels only")

    triple = TripleDelta(0.1, -0.05, 0.15)
    winter = Winter(-0.1)
    # crude seeds so Newton does real work
    seeds_t = [generic_pole_approx(triple, n, b, 0).w_approx for n in range(1, args.n_max + 1) for b in triple.branches]
    seeds_w = [2j * math.pi * n for n in range(1, args.n_max + 1)]
    rng = np.random.default_rng(0)
    s = rng.normal(size=args.order + 1) + 1j * rng.normal(size=args.order + 1)
    t = s + 3.0

    cases = [
        (f"newton, triple, {len(seeds_t)} seeds", lambda k: newton_sweep(k, triple, seeds_t)),
        (f"newton, winter, {len(seeds_w)} seeds", lambda k: newton_sweep(k, winter, seeds_w)),
        (f"series mul/div/log/exp/sqrt, K={args.order}", lambda k: series_ops(k, s, t)),
    ]

    rows = []
    for label, case in cases:
        times = {name: bench(lambda: case(_kernels.get_backend(name)), args.repeat) for name in backends}
        rows.append((label, times))

    previous = _kernels.backend_name()
    pipe = {}
    for name in backends:
        _kernels.set_backend(name)
        pipe[name] = bench(lambda: pipeline(triple, 50), args.repeat)
    _kernels.set_backend(previous)
    rows.append(("exact_pole, triple, n=1..50, both branches", pipe))

    print(f"{'case':<46}" + "".join(f"{b:>14}" for b in backends) + ("   speed-up" if len(backends) > 1 else ""))
    for label, times in rows:
        line = f"{label:<46}" + "".join(f"{times[b] * 1e3:>11.3f} ms" for b in backends)
        if len(backends) > 1:
            line += f"   {times['python'] / times['cython']:>7.1f}x"
        print(line)

    if len(backends) > 1:
        py, cy = (newton_sweep(_kernels.get_backend(b), triple, seeds_t) for b in ("python", "cython"))
        same = sum(a == b for a, b in zip(py, cy))
        print(f"\nnewton results identical on {same}/{len(py)} triple seeds")


if __name__ == "__main__":
    main()
