#!/usr/bin/env python3
"""Time the compiled kernels against the numpy fallback.

Usage, from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py [--repeats N] [--batch B]

Shapes mirror the image model's two convolution blocks. Outputs are
compared bitwise before timing, so a reported speedup is never bought
with a numerical difference.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from salf import _kernels_py as ref

try:
    from salf import _kernels as ext
except ImportError:
    ext = None


def _cases(batch: int):
    rng = np.random.default_rng(0)

    def conv(name, n, c, hp, wp, k):
        x = rng.standard_normal((n, c, hp, wp))
        cols = ref.im2col(x, k, k)
        yield f"im2col {name}", "im2col", (x, k, k)
        yield f"col2im {name}", "col2im", (cols, n, c, hp, wp, k, k)

    def pool(name, n, c, h, w):
        x = rng.standard_normal((n, c, h, w))
        _, idx = ref.maxpool2_forward(x)
        dout = rng.standard_normal((n, c, h // 2, w // 2))
        yield f"pool-fwd {name}", "maxpool2_forward", (x,)
        yield f"pool-bwd {name}", "maxpool2_backward", (dout, idx, h, w)

    yield from conv("28x28x1", batch, 1, 28, 28, 5)
    yield from conv("12x12x16", batch, 16, 12, 12, 5)
    yield from pool("24x24x16", batch, 16, 24, 24)
    yield from pool("8x8x32", batch, 32, 8, 8)


def _best_of(fn, args, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def _identical(a, b) -> bool:
    if isinstance(a, tuple):
        return all(_identical(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def main() -> int:
    parser = argparse.ArgumentParser(description="kernel backend benchmark")
    parser.add_argument("--repeats", type=int, default=30)
    parser.add_argument("--batch", type=int, default=64)
    args = parser.parse_args()

    if ext is None:
        print("compiled extension not importable; build it with "
              "`pip install -e . --no-build-isolation` and rerun", file=sys.stderr)
        return 1

    print(f"{'case':<22} {'numpy ms':>10} {'cython ms':>10} {'speedup':>8}")
    for label, fn_name, call_args in _cases(args.batch):
        out_ref = getattr(ref, fn_name)(*call_args)
        out_ext = getattr(ext, fn_name)(*call_args)
        assert _identical(out_ref, out_ext), f"{label}: backends disagree"
        t_ref = _best_of(getattr(ref, fn_name), call_args, args.repeats)
        t_ext = _best_of(getattr(ext, fn_name), call_args, args.repeats)
        print(f"{label:<22} {t_ref * 1e3:>10.3f} {t_ext * 1e3:>10.3f} "
              f"{t_ref / t_ext:>7.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
