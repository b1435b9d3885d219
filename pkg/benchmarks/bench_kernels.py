"""Compiled vs numpy-fallback timings for the lp inner loops and tile transforms.

Usage: python benchmarks/bench_kernels.py [--repeat 5] [--tiles 1568] [--channels 32]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from winoadder.kernels import _backend, available_backends


def _best(fn, repeat: int) -> float:
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases(tiles: int, channels: int, out: int, rng):
    V = rng.standard_normal((tiles, channels, 16))
    G = rng.standard_normal((out, channels, 16))
    dS = rng.standard_normal((tiles, out, 16))
    n, th = tiles // 49 or 1, 7
    xp = rng.standard_normal((n, channels, 2 * th + 2, 2 * th + 2))
    B = rng.standard_normal((4, 4))
    A = rng.standard_normal((4, 2))
    S = rng.standard_normal((n * th * th, out, 16))
    X = rng.standard_normal((tiles, channels * 9))
    W = rng.standard_normal((channels * 9, out))
    dY = rng.standard_normal((tiles, out))
    out_cases = []
    for p in (1.0, 1.5, 2.0):
        out_cases.append((f"wino_forward p={p}", lambda p=p: _backend.wino_forward(V, G, p), tiles * out * channels * 16))
        out_cases.append((f"wino_backward p={p}", lambda p=p: _backend.wino_backward(V, G, dS, p), tiles * out * channels * 16))
    out_cases.append(("direct_forward p=1.0", lambda: _backend.direct_forward(X, W, 1.0), tiles * out * channels * 9))
    out_cases.append(("direct_backward p=1.0", lambda: _backend.direct_backward(X, W, dY, 1.0), tiles * out * channels * 9))
    out_cases.append(("input_transform", lambda: _backend.input_transform(xp, B, th, th), n * th * th * channels))
    out_cases.append(("output_transform", lambda: _backend.output_transform(S, A, n, th, th), n * th * th * out))
    return out_cases


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--tiles", type=int, default=1568, help="tiles per call (64 images of 14x14)")
    ap.add_argument("--channels", type=int, default=32)
    ap.add_argument("--out", type=int, default=32)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    backends = available_backends()
    print(f"backends: {', '.join(backends)}; tiles={args.tiles} C={args.channels} O={args.out}")
    print(f"{'kernel':<24}" + "".join(f"{b + ' ms':>14}{b + ' ns/elt':>16}" for b in backends) + f"{'speedup':>10}")
    for name, fn, elems in cases(args.tiles, args.channels, args.out, np.random.default_rng(args.seed)):
        row, secs = f"{name:<24}", {}
        for b in backends:
            with _backend.use_backend(b):
                secs[b] = _best(fn, args.repeat)
            row += f"{secs[b] * 1e3:>14.2f}{secs[b] * 1e9 / elems:>16.3f}"
        if len(secs) == 2:
            row += f"{secs['python'] / secs['compiled']:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
