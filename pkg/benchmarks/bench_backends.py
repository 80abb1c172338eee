"""Compare the two exact-rational backends on the real workload.

The inner kernel of everything here is exact row reduction over Q (every
prolongation level is one big kernel computation), so the scalar backend is
the single performance lever that matters.  This script times a
representative slice -- the prolongation chains of the two parabolics and a
full catalog verification -- under gmpy2.mpq and fractions.Fraction by
re-running itself in a subprocess with SYMPROL_BACKEND set.

    python benchmarks/bench_backends.py
"""

import os
import subprocess
import sys
import time


def workload():
    from symprol import catalog
    from symprol.prolongation import prolong_chain

    t0 = time.perf_counter()
    for name in ("p1", "p2", "s1"):
        chain = prolong_chain(catalog.get(name).instantiate(), kmax=2)
        assert chain.dims[0] > 0
    reports = catalog.verify_all()
    assert all(r.ok for r in reports)
    return time.perf_counter() - t0


def main():
    if os.environ.get("SYMPROL_BACKEND"):
        from symprol.scalars import BACKEND
        dt = workload()
        print(f"{BACKEND}: {dt:.3f}s")
        return
    for backend in ("gmpy2", "fraction"):
        env = dict(os.environ, SYMPROL_BACKEND=backend)
        try:
            subprocess.run([sys.executable, __file__], env=env, check=True)
        except subprocess.CalledProcessError:
            print(f"{backend}: unavailable")


if __name__ == "__main__":
    main()
