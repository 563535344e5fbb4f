"""Compare the compiled and numpy kernel backends.

    python3 benchmarks/bench_kernels.py --p 3 --n 1 --repeat 200
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from fd2p.algebra import AlgebraContext
from fd2p.kernels import backends
from fd2p.structure import gamma_fp_basis


def timed(fn, repeat: int) -> float:
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t0) / repeat


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--n", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    ctx = AlgebraContext.create(args.p, args.n)
    rng = np.random.default_rng(args.seed)
    x, y = rng.integers(0, ctx.p, (2, ctx.dim))
    m = rng.integers(0, ctx.p, (ctx.dim, ctx.dim))
    gens = gamma_fp_basis(ctx)
    mods = backends()
    print(f"p={ctx.p} n={ctx.n} dim={ctx.dim} scan size={ctx.p ** gens.shape[0]}; backends: {', '.join(mods)}")
    rows = {}
    for name, mod in mods.items():
        args_k = (ctx.table, ctx.p, ctx.n, ctx.f)
        rows[name] = {
            "mul": timed(lambda: mod.mul(x, y, *args_k), args.repeat),
            "left_matrix": timed(lambda: mod.left_matrix(x, *args_k), args.repeat),
            "rref": timed(lambda: mod.rref_inplace(m.copy(), ctx.p), args.repeat),
            "scan(1+Gamma)": timed(lambda: mod.scan(ctx.one.v, gens, ctx.table, ctx.inv, ctx.p, ctx.n, ctx.f,
                                                    True), 1),
        }
    ops = list(next(iter(rows.values())))
    print(f"{'op':16s}" + "".join(f"{n:>14s}" for n in rows) + ("     speedup" if len(rows) > 1 else ""))
    for op in ops:
        line = f"{op:16s}" + "".join(f"{rows[n][op] * 1e6:12.1f}us" for n in rows)
        if "cython" in rows and "python" in rows:
            line += f"{rows['python'][op] / rows['cython'][op]:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
