"""Compare the compiled and pure-Python kernel backends.

Run with ``python3 benchmarks/bench_kernels.py [--repeat R]``. Kernel timings
call both backend modules directly. The end-to-end row runs the full
analysis pipeline in a subprocess per backend, since the backend is fixed
at import time.
"""

import argparse
import os
import subprocess
import sys
import timeit

from primaldyn._backend import available_backends
from primaldyn.fgraph import gen_random, product_map

PIPELINE = """
import time
from primaldyn.checks import pipeline_verdicts, random_maps
maps = [f for n in range(5, 11) for f in random_maps(n, 60, seed=99)]
t = time.perf_counter()
for f in maps:
    pipeline_verdicts(f)
print(time.perf_counter() - t)
"""


def kernel_cases():
    big = gen_random(20_000, 11).succ
    mid = gen_random(60, 5).succ
    f2 = product_map(gen_random(120, 3)).succ
    target = bytes(1 if y % 7 == 0 else 0 for y in range(len(f2)))
    return {
        "rho_arrays n=20000": lambda k: k.rho_arrays(big),
        "component_labels n=20000": lambda k: k.component_labels(big),
        "scan_set_orbit n=60": lambda k: k.scan_set_orbit(mid, (1 << 60) - 1, 1 << 3),
        "scan_point_orbit n=14400 x all": lambda k: [k.scan_point_orbit(f2, x, target)
                                                     for x in range(0, len(f2), 16)],
    }


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def pipeline_time(pure):
    env = dict(os.environ)
    env.pop("PRIMALDYN_PURE", None)
    if pure:
        env["PRIMALDYN_PURE"] = "1"
    out = subprocess.run([sys.executable, "-c", PIPELINE], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout.strip())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the python backend is available")
    names = sorted(backends)
    print(f"{'case':34}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, fn in kernel_cases().items():
        times = {n: best(lambda: fn(backends[n]), args.repeat) for n in names}
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{label:34}" + "".join(f"{times[n] * 1e3:10.2f}ms" for n in names) + f"{speed:9.1f}x")
    rows = {"python": pipeline_time(True)}
    if "cython" in backends:
        rows["cython"] = pipeline_time(False)
    speed = rows["python"] / rows["cython"] if "cython" in rows else float("nan")
    print(f"{'pipeline 360 maps n=5..10':34}" + "".join(f"{rows[n] * 1e3:10.0f}ms" for n in names)
          + f"{speed:9.1f}x")


if __name__ == "__main__":
    main()
