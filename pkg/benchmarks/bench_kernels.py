"""Compare the compiled kernels against the pure-Python fallback.

Each workload runs in a fresh interpreter so the backend is chosen at import
(MOULDCALC_PURE=1 forces the fallback). Prints one line per workload with the
best-of-N time for each backend and the speedup.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "pmul": """
import random
from mouldcalc.exactalg import _kernels_py as P
rng = random.Random(1)
B = P.FIELD_BITS
def rp():
    return {sum(rng.randint(0, 3) << (B * i) for i in range(5)): rng.randint(-9, 9) or 1 for _ in range(60)}
pairs = [(rp(), rp()) for _ in range(40)]
def run():
    for p, q in pairs:
        K.pmul(p, q)
""",
    "div_linear": """
import random
from mouldcalc.exactalg import _kernels_py as P
rng = random.Random(2)
B = P.FIELD_BITS
def rp():
    return {sum(rng.randint(0, 3) << (B * i) for i in range(4)): rng.randint(-9, 9) or 1 for _ in range(40)}
lin = {1: 1, 1 << B: -1, 1 << (2 * B): 2}
cases = [P.pmul(rp(), lin) for _ in range(40)]
def run():
    for p in cases:
        K.div_linear(p, 0, 1, {1 << B: -1, 1 << (2 * B): 2})
        K.may_divide(p, 0, 1, {1 << B: -1, 1 << (2 * B): 2})
""",
    "mu_depth4": """
import random
from mouldcalc.gamma import GammaSpec
from mouldcalc.mould import mu, random_mould
spec = GammaSpec([2])
a = random_mould("V", spec, 4, random.Random(3), empty=1)
b = random_mould("V", spec, 4, random.Random(4), empty=1)
def run():
    mu(a, b)
""",
    "symmetril_check": """
from mouldcalc.gamma import GammaSpec
from mouldcalc.symmetry import check_symmetry, random_structured
m = random_structured("symmetril", GammaSpec([2]), 3, seed=1)
def run():
    check_symmetry(m, "symmetril")
""",
}

DRIVER = """
import json, time
from mouldcalc.exactalg import kernels as K
{setup}
best = None
for _ in range({repeat}):
    t = time.perf_counter()
    run()
    dt = time.perf_counter() - t
    best = dt if best is None else min(best, dt)
print(json.dumps({{"backend": K.BACKEND, "seconds": best}}))
"""


def measure(name, pure, repeat):
    env = dict(os.environ)
    if pure:
        env["MOULDCALC_PURE"] = "1"
    else:
        env.pop("MOULDCALC_PURE", None)
    code = DRIVER.format(setup=WORKLOADS[name], repeat=repeat)
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("workloads", nargs="*", default=sorted(WORKLOADS))
    args = ap.parse_args(argv)
    print("%-16s %12s %12s %8s" % ("workload", "compiled(s)", "pure(s)", "speedup"))
    for name in args.workloads:
        fast = measure(name, False, args.repeat)
        slow = measure(name, True, args.repeat)
        if fast["backend"] != "compiled":
            print("%-16s compiled extension not built; run setup.py build_ext --inplace" % name)
            continue
        print("%-16s %12.4f %12.4f %7.1fx" % (name, fast["seconds"], slow["seconds"], slow["seconds"] / fast["seconds"]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
