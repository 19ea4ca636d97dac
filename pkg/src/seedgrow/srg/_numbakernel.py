"""Numba-compiled growing kernel (default backend).

Mirrors _pykernel.grow_kernel operation for operation; math.exp/math.sqrt
lower to the same libm calls CPython uses, so keys and therefore outputs
are bit-identical across the two backends.
"""

from __future__ import annotations

import heapq
import math

import numpy as np
from numba import njit


@njit(cache=True, inline="always")
def _similarity(hsv, sal, r0, c0, r1, c1):
    dh = abs(hsv[r0, c0, 0] - hsv[r1, c1, 0])
    dh = min(dh, 255.0 - dh)
    ds = hsv[r0, c0, 1] - hsv[r1, c1, 1]
    dv = hsv[r0, c0, 2] - hsv[r1, c1, 2]
    dist = math.sqrt(dh * dh + ds * ds + dv * dv)
    return math.exp(abs(sal[r0, c0] - sal[r1, c1])) * dist


@njit(cache=True, nogil=True)
def grow_kernel(hsv, sal, labels, theta, connectivity):
    h, w = labels.shape
    dr = np.array((-1, 1, 0, 0, -1, -1, 1, 1), dtype=np.int64)
    dc = np.array((0, 0, -1, 1, -1, 1, -1, 1), dtype=np.int64)

    heap = [(0.0, 0, 0, 0)]
    heap.pop()
    for r in range(h):
        for c in range(w):
            if labels[r, c] == 255:
                continue
            lab = np.int64(labels[r, c])
            for k in range(connectivity):
                nr, nc = r + dr[k], c + dc[k]
                if 0 <= nr < h and 0 <= nc < w and labels[nr, nc] == 255:
                    key = _similarity(hsv, sal, nr, nc, r, c)
                    heap.append((key, lab, nr * w + nc, np.int64(r * w + c)))
    heapq.heapify(heap)

    while len(heap) > 0:
        key, lab, p, _q = heapq.heappop(heap)
        pr, pc = p // w, p % w
        if labels[pr, pc] != 255:
            continue
        if not key < theta:
            continue
        labels[pr, pc] = np.uint8(lab)
        for k in range(connectivity):
            nr, nc = pr + dr[k], pc + dc[k]
            if 0 <= nr < h and 0 <= nc < w and labels[nr, nc] == 255:
                nkey = _similarity(hsv, sal, nr, nc, pr, pc)
                heapq.heappush(heap, (nkey, lab, nr * w + nc, p))
