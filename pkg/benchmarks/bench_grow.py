"""Benchmark the region-growing backends (numba njit vs pure Python).

Builds a synthetic image of colored blobs on a noisy background, scatters
seeds, grows with each backend, checks the outputs are byte-identical, and
reports times.

    python3 benchmarks/bench_grow.py --size 256 --repeats 3
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from seedgrow import GrowConfig, HsvImage, LabelMap, SaliencyMap
from seedgrow.srg import available_backends, grow_regions


def build_instance(size: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    hsv = rng.uniform(0.0, 30.0, size=(size, size, 3))
    sal = np.full((size, size), 0.1)
    seeds = np.full((size, size), 255, dtype=np.uint8)

    # background seeds along the border
    seeds[0, :: size // 8] = 0

    n_blobs = max(4, size // 32)
    for blob in range(n_blobs):
        cls = 1 + blob % 4
        r = int(rng.integers(size // 8, size - size // 8))
        c = int(rng.integers(size // 8, size - size // 8))
        half = int(rng.integers(size // 16, size // 6))
        r0, r1 = max(0, r - half), min(size, r + half)
        c0, c1 = max(0, c - half), min(size, c + half)
        hsv[r0:r1, c0:c1] = (40.0 * cls) % 250, 180.0, 200.0
        hsv[r0:r1, c0:c1] += rng.uniform(-2.0, 2.0, size=(r1 - r0, c1 - c0, 3))
        sal[r0:r1, c0:c1] = 0.85
        seeds[r, c] = cls

    hsv = np.clip(hsv, 0.0, 255.0)
    return HsvImage(hsv), SaliencyMap(sal), LabelMap(seeds), GrowConfig(theta=12.0)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=256, help="grid side length")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    img, sal, seeds, cfg = build_instance(args.size)
    backends = available_backends()
    print(f"grid {args.size}x{args.size}, backends: {', '.join(backends)}")

    # warm up (jit compile / cache load)
    outputs = {}
    for backend in backends:
        outputs[backend] = grow_regions(img, sal, seeds, cfg, backend=backend)

    reference = next(iter(outputs.values()))
    for backend, out in outputs.items():
        if out.data.tobytes() != reference.data.tobytes():
            raise SystemExit(f"backend {backend} disagrees with the others")
    labeled = float(np.count_nonzero(reference.data != 255)) / reference.data.size
    print(f"labeled fraction: {labeled:.3f}")

    times = {}
    for backend in backends:
        best = float("inf")
        for _ in range(args.repeats):
            start = time.perf_counter()
            grow_regions(img, sal, seeds, cfg, backend=backend)
            best = min(best, time.perf_counter() - start)
        times[backend] = best
        print(f"{backend:>7}: {best * 1000:9.2f} ms")

    if "numba" in times and "python" in times:
        print(f"speedup: {times['python'] / times['numba']:.1f}x")


if __name__ == "__main__":
    main()
