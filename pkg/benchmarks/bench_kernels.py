"""Benchmark the evaluation kernels: numba loops vs vectorised numpy.

Both kernels run on the same compiled programs and must agree; the script
prints mean milliseconds per call and the speedup.

    python3 benchmarks/bench_kernels.py --formulas 200 --depth 6
"""

import argparse
import time

import numpy as np

from kuroda.generate import GeneratorConfig, random_formula
from kuroda.provers import kernels
from kuroda.provers.semantics import _upsets, compile_formula, rooted_posets


def timed(fn, programs, repeat):
    start = time.perf_counter()
    results = None
    for _ in range(repeat):
        results = [fn(p) for p in programs]
    return (time.perf_counter() - start) * 1000 / (repeat * len(programs)), results


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--formulas", type=int, default=200)
    parser.add_argument("--depth", type=int, default=6)
    parser.add_argument("--atoms", type=int, default=6, help="number of atoms P0..")
    parser.add_argument("--worlds", type=int, default=3, help="Kripke frame size")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    if kernels.numba is None:
        print("numba is not installed; only the numpy kernels can run")
        return 1

    config = GeneratorConfig(max_depth=args.depth, seed=args.seed,
                             atoms=tuple(f"P{i}" for i in range(args.atoms)))
    programs = []
    for i in range(args.formulas):
        ops, a1, a2, atom_list = compile_formula(random_formula(config, i), bottom_atom=True)
        programs.append((ops, a1, a2, len(atom_list)))

    frames = [(np.array(up, dtype=np.int64), _upsets(up)) for up in rooted_posets(args.worlds)]

    cases = {
        "truth table": lambda p, nb: kernels.falsifying_row(p[0], p[1], p[2], p[3], use_numba=nb),
        "kripke frames": lambda p, nb: [
            kernels.refuting_valuation(p[0], p[1], p[2], p[3], up, ups, use_numba=nb)
            for up, ups in frames],
    }
    print(f"{args.formulas} formulas, depth <= {args.depth}, {args.atoms} atoms + bottom, "
          f"{len(frames)} frames of {args.worlds} worlds")
    for name, call in cases.items():
        call(programs[0], True)  # compile outside the timing
        t_np, r_np = timed(lambda p: call(p, False), programs, args.repeat)
        t_nb, r_nb = timed(lambda p: call(p, True), programs, args.repeat)
        agree = "agree" if r_np == r_nb else "DISAGREE"
        print(f"  {name:14s} numpy {t_np:8.3f} ms  numba {t_nb:8.3f} ms  "
              f"speedup {t_np / t_nb:6.1f}x  ({agree})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
