"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Prints one CSV row per (kernel, case, backend) with the best wall time and
the speedup of the compiled backend over the pure-Python one.
"""

import argparse
import csv
import random
import sys
import timeit

from seqmerit import kernels


def cases(quick):
    rng = random.Random(7)
    seq = [rng.choice((-1, 1)) for _ in range(62)]
    n_search = 16 if quick else 22
    n_energy = 14 if quick else 20
    n_perfect = 12 if quick else 16
    return [
        ("aperiodic_pm", "n=62", lambda core: core.aperiodic_pm(seq)),
        ("bounded_leaves", f"n={n_search},c=2", lambda core: core.bounded_leaves(n_search, 2, [])),
        ("min_energy", f"n={n_energy}", lambda core: core.min_energy(n_energy, [-1, -1])),
        ("perfect_rows", f"n={n_perfect}", lambda core: core.perfect_rows(n_perfect)),
    ]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="smaller problem sizes")
    args = parser.parse_args(argv)

    backends = kernels.backends()
    if "compiled" not in backends:
        print("compiled extension not built; timing the pure-Python backend only",
              file=sys.stderr)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["kernel", "case", "backend", "seconds", "speedup"])
    for kernel, label, call in cases(args.quick):
        times = {}
        results = {}
        for name, core in sorted(backends.items()):
            timer = timeit.Timer(lambda: call(core))
            loops, _ = timer.autorange()
            times[name] = min(timer.repeat(args.repeat, loops)) / loops
            results[name] = call(core)
        if len({repr(sorted(r) if isinstance(r, list) else r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {kernel} {label}")
        for name in sorted(times):
            speedup = times["python"] / times[name]
            writer.writerow([kernel, label, name, f"{times[name]:.6f}", f"{speedup:.1f}"])
    return 0


if __name__ == "__main__":
    sys.exit(main())
