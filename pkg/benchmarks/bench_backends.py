"""Time the flint and pure-Python polynomial backends on a few workloads.

Each backend runs in its own interpreter (the backend is fixed at import).
Besides the timings, the canonical report bodies of the two runs are compared:
they must be byte-identical.

    python benchmarks/bench_backends.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from braidkit import _backend
from braidkit.symmetries import make_symmetry
from braidkit.suites import RunConfig, run_suite
from braidkit import fock
from braidkit.yangian import evaluation as ev

repeat = int(sys.argv[1])
out = {"backend": _backend.BACKEND, "timings": {}}

def timed(name, fn):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    out["timings"][name] = best
    return res

timed("skew_symmetrizer standard(3) P^(3)", lambda: make_symmetry("standard", N=3).skew_symmetrizer(3))
timed("fock standard(2) D=5 ccr", lambda: fock.ccr_check(make_symmetry("standard", N=2), 5))
timed("chn k=2 standard(2), ideal path", lambda: ev.identity_check(
    make_symmetry("standard", N=2), "chn", 2, target=None))
rep = timed("core suite standard(2)", lambda: run_suite(RunConfig(suite="core")))
out["canonical"] = rep.canonical()
print(json.dumps(out))
"""


def run(backend: str, repeat: int) -> dict:
    env = dict(os.environ, BRAIDKIT_BACKEND=backend)
    res = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env, capture_output=True, text=True,
                         check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    results = [run(b, args.repeat) for b in ("flint", "python")]
    names = list(results[0]["timings"])
    print(f"{'workload':<40} {'flint (s)':>10} {'python (s)':>11} {'ratio':>7}")
    for n in names:
        a, b = results[0]["timings"][n], results[1]["timings"][n]
        print(f"{n:<40} {a:>10.3f} {b:>11.3f} {b / a:>7.1f}")
    same = results[0]["canonical"] == results[1]["canonical"]
    print("canonical reports identical:", same)
    return 0 if same else 1


if __name__ == "__main__":
    sys.exit(main())
