"""Compare the compiled and pure-Python elimination kernels.

Times ``elementary_divisors`` on the boundary matrices that actually occur
in derived-functor computations (normalised models of a few functors) plus
random sparse integer matrices, and checks both backends agree.

    python3 benchmarks/bench_elim.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from derifun.budget import Budget
from derifun.derived import resolve
from derifun.functors import parse_functor
from derifun.simplicial import KComplex, NormalizedModel
from derifun.zlinalg import BACKEND, FgAbGroup, IntMatrix, elementary_divisors


def model_matrices(text: str, orders: list[int], shift: int, level: int) -> list[IntMatrix]:
    c = resolve(FgAbGroup.from_orders(orders)).complex(shift)
    model = NormalizedModel(parse_functor(text), KComplex(c), Budget())
    return [model.differential(m) for m in range(1, level + 1)]


def random_sparse(rng: random.Random, rows: int, cols: int, density: float) -> IntMatrix:
    # unit entries, like simplicial boundary matrices; non-unit pivots fall to the
    # shared dense phase, which is identical for both backends
    data = [[rng.choice((-1, 1)) if rng.random() < density else 0 for _ in range(cols)]
            for _ in range(rows)]
    return IntMatrix.from_dense(data, rows, cols)


def cases(rng: random.Random) -> dict[str, list[IntMatrix]]:
    return {
        "Lie^3 on Z/3, shift 2": model_matrices("Lie^3", [3], 2, 7),
        "L^2 o L^2 on Z/2, shift 2": model_matrices("L^2 o L^2", [2], 2, 6),
        "SP^3 on Z + Z/2, shift 1": model_matrices("SP^3", [0, 2], 1, 6),
        "random sparse 600x600": [random_sparse(rng, 600, 600, 0.005) for _ in range(3)],
    }


def timed(mats: list[IntMatrix], backend: str, repeat: int) -> tuple[float, list]:
    best = float("inf")
    out: list = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = [elementary_divisors(m, backend=backend) for m in mats]
        best = min(best, time.perf_counter() - start)
    return best, out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"default backend: {BACKEND}")
    if BACKEND != "cython":
        print("compiled kernel unavailable; both columns use the Python path")
    header = f"{'case':32} {'matrices':>8} {'max cols':>8} {'python s':>9} {'cython s':>9} {'speedup':>7}"
    print(header)
    print("-" * len(header))
    for name, mats in cases(random.Random(args.seed)).items():
        py, py_out = timed(mats, "python", args.repeat)
        cy, cy_out = timed(mats, "cython", args.repeat)
        if py_out != cy_out:
            raise SystemExit(f"backends disagree on {name}")
        widest = max(m.cols for m in mats)
        print(f"{name:32} {len(mats):>8} {widest:>8} {py:>9.4f} {cy:>9.4f} {py / cy:>6.1f}x")


if __name__ == "__main__":
    main()
