"""Time full CAD builds of the four-variable example system.

    python benchmarks/bench_pipeline.py [--strategy resultants|gb] [--only 8 12]

Run once normally and once with ECCAD_PURE_PYTHON=1 to compare backends.
"""

import argparse
import time

from eccad import kernels
from eccad.ecpipe import candidates_for, enumerate_designations
from eccad.formula import defining_polynomials, explicit_ec_list, parse_formula, replace_ecs
from eccad.lifting import Fail, lift_all
from eccad.projection import project_all

SYSTEM = """vars: z > y > x > w
x*y - z^2 - w^2 = 0 /\\ x + y^2 + z + w = 0 /\\ x - y^2 + z - w = 0 /\\ x + y + z + w > 0
"""


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--strategy", default="resultants", choices=["resultants", "gb"])
    ap.add_argument("--only", type=int, nargs="*", help="designation indices")
    args = ap.parse_args()
    F = parse_formula(SYSTEM)
    C = candidates_for(args.strategy, explicit_ec_list(F), F.order)
    Ds = enumerate_designations(C)
    base = F if args.strategy == "resultants" else replace_ecs(F, C.basis.gens)
    A = defining_polynomials(base)
    print(f"backend: {kernels.BACKEND}")
    total = 0.0
    for i in args.only if args.only else range(len(Ds)):
        D = Ds[i]
        t = time.perf_counter()
        cad = lift_all(project_all(set(A) | set(D.contents), F.order, D.as_dict()))
        dt = time.perf_counter() - t
        total += dt
        cells = "FAIL" if isinstance(cad, Fail) else len(cad)
        print(f"{D.label():<16} {cells:>5} cells {dt:8.2f}s")
    print(f"total {total:.2f}s")


if __name__ == "__main__":
    main()
