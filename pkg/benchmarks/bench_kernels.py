"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--json]

Each workload runs once per backend, the outputs are checked for
equality, and the best of ``--repeat`` wall-clock timings is reported.
"""

import argparse
import json
import random
import sys
import time

from toricext import AffineSemigroup, TermOrder, kernels, toric_groebner
from toricext.ideals import buchberger
from toricext.semigroup import make_extension


def _groebner(S):
    def run(backend):
        return toric_groebner(S, backend=backend).canonical()
    return run


def _representations(gens, m):
    def run(backend):
        return kernels.get_backend(backend).representations(gens, m)
    return run


def _normal_forms(seed=0, count=20000):
    S = AffineSemigroup.of(11, 13, 17, 19, 23)
    gb = toric_groebner(S, TermOrder.degrevlex(5))
    rng = random.Random(seed)
    monos = [tuple(rng.randint(0, 12) for _ in range(5)) for _ in range(count)]

    def run(backend):
        red = gb.reducer(backend)
        return [red.normal_form(m) for m in monos]
    return run


def _extension_ideal():
    S = AffineSemigroup.of((6, 0), (0, 2), (7, 0), (6, 4), (15, 0))
    ext = make_extension(S, 3, (6, 4))
    gens = [g.pad() for g in toric_groebner(S).elements] + [ext.F]

    def run(backend):
        return buchberger(gens, TermOrder.lex(6), backend).canonical()
    return run


WORKLOADS = {
    "toric GB N{11,13,17,19,23}": _groebner(AffineSemigroup.of(11, 13, 17, 19, 23)),
    "toric GB surface, 6 generators": _groebner(AffineSemigroup.of((5, 0), (4, 1), (3, 3), (1, 4), (0, 5), (2, 7))),
    "representations of 120 in N{3,5,7,11}": _representations([(3,), (5,), (7,), (11,)], (120,)),
    "representations of (40,40) in 4 generators": _representations([(1, 0), (1, 2), (0, 3), (2, 1)], (40, 40)),
    "20000 monomial normal forms": _normal_forms(),
    "lex GB of an extension ideal": _extension_ideal(),
}


def best_time(fn, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    if "cython" not in kernels.BACKENDS:
        print("compiled kernels are not built; only the Python backend is available", file=sys.stderr)
        return 1
    rows = []
    for name, fn in WORKLOADS.items():
        tp, rp = best_time(fn, "python", args.repeat)
        tc, rc = best_time(fn, "cython", args.repeat)
        if rp != rc:
            print(f"backends disagree on {name!r}", file=sys.stderr)
            return 2
        rows.append({"workload": name, "python_s": round(tp, 4), "cython_s": round(tc, 4),
                     "speedup": round(tp / tc, 2) if tc else None})
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        width = max(len(r["workload"]) for r in rows)
        print(f"{'workload':<{width}}  {'python':>9}  {'cython':>9}  speedup")
        for r in rows:
            print(f"{r['workload']:<{width}}  {r['python_s']:>8.4f}s  {r['cython_s']:>8.4f}s  {r['speedup']:>6.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
