"""Time the compiled and pure-numpy convolution/pooling kernels side by side.

    python benchmarks/bench_kernels.py [--repeat 20]

Shapes mirror one small28 training step (a 33-image triplet batch) and one
vgg16_100 first block on a single 200x200 image.
"""

import argparse
import timeit

import numpy as np

from sbfnet import _kernels_py

try:
    from sbfnet import _kernels as _compiled
except ImportError:
    _compiled = None

CASES = [
    ("small28 conv1", (33, 28, 28, 1), 3, 2),
    ("small28 conv2", (33, 14, 14, 32), 3, 2),
    ("vgg16 block1", (1, 200, 200, 64), 3, 2),
]


def bench(impl, shape, k, pool, repeat):
    rng = np.random.default_rng(0)
    x = rng.standard_normal(shape)
    cols = impl.im2col(x, k, k, k // 2)
    pooled, arg = impl.maxpool_forward(x, pool)
    g = rng.standard_normal(pooled.shape)
    fns = {
        "im2col": lambda: impl.im2col(x, k, k, k // 2),
        "col2im": lambda: impl.col2im(cols, x.shape, k, k, k // 2),
        "pool fwd": lambda: impl.maxpool_forward(x, pool),
        "pool bwd": lambda: impl.maxpool_backward(g, arg, x.shape, pool),
    }
    return {name: min(timeit.repeat(fn, number=1, repeat=repeat)) for name, fn in fns.items()}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=10)
    args = parser.parse_args()
    backends = [("numpy", _kernels_py)] + ([("cython", _compiled)] if _compiled else [])
    if _compiled is None:
        print("compiled extension not built; timing numpy only")
    print(f"{'case':<16}{'op':<10}" + "".join(f"{name + ' ms':>12}" for name, _ in backends)
          + ("   speedup" if _compiled else ""))
    for label, shape, k, pool in CASES:
        results = [bench(impl, shape, k, pool, args.repeat) for _, impl in backends]
        for op in results[0]:
            times = [r[op] * 1e3 for r in results]
            line = f"{label:<16}{op:<10}" + "".join(f"{t:>12.3f}" for t in times)
            if len(times) == 2:
                line += f"{times[0] / times[1]:>9.1f}x"
            print(line)


if __name__ == "__main__":
    main()
