"""Pure-Python growing kernel (heapq-based fallback backend).

Keys are computed with scalar math.exp/math.sqrt so that this kernel, the
numba kernel, and the scan oracle produce bit-identical similarities; the
vectorized numpy transcendentals round differently in the last ulp, which
can flip heap order or a theta comparison.
"""

from __future__ import annotations

import heapq
import math

import numpy as np

# First four offsets are the 4-connected neighborhood.
OFFSETS = ((-1, 0), (1, 0), (0, -1), (0, 1), (-1, -1), (-1, 1), (1, -1), (1, 1))


def similarity(hsv: np.ndarray, sal: np.ndarray, r0: int, c0: int, r1: int, c1: int) -> float:
    """Saliency-weighted HSV distance between two pixels.

    exp(|dS|) * sqrt(dh^2 + ds^2 + dv^2), hue difference taken circularly
    on the [0, 255) wheel. Symmetric by construction.
    """
    dh = abs(hsv[r0, c0, 0] - hsv[r1, c1, 0])
    dh = min(dh, 255.0 - dh)
    ds = hsv[r0, c0, 1] - hsv[r1, c1, 1]
    dv = hsv[r0, c0, 2] - hsv[r1, c1, 2]
    dist = math.sqrt(dh * dh + ds * ds + dv * dv)
    return math.exp(abs(sal[r0, c0] - sal[r1, c1])) * dist


def grow_kernel(
    hsv: np.ndarray, sal: np.ndarray, labels: np.ndarray, theta: float, connectivity: int
) -> None:
    """Priority-front region growing; mutates `labels` in place.

    Candidates (key, label, p, q) pop in lexicographic order: key first,
    then label index, then row-major indices of the target and source
    pixels. Labels never change once assigned, so stale heap entries are
    simply skipped, and a popped candidate with key >= theta is discarded
    (its key never changes, it can never become admissible).
    """
    h, w = labels.shape
    offsets = OFFSETS[:connectivity]

    heap = []
    for r in range(h):
        for c in range(w):
            lab = int(labels[r, c])
            if lab == 255:
                continue
            for dr, dc in offsets:
                nr, nc = r + dr, c + dc
                if 0 <= nr < h and 0 <= nc < w and labels[nr, nc] == 255:
                    key = similarity(hsv, sal, nr, nc, r, c)
                    heap.append((key, lab, nr * w + nc, r * w + c))
    heapq.heapify(heap)

    while heap:
        key, lab, p, _q = heapq.heappop(heap)
        pr, pc = divmod(p, w)
        if labels[pr, pc] != 255:
            continue
        if not key < theta:
            continue
        labels[pr, pc] = lab
        for dr, dc in offsets:
            nr, nc = pr + dr, pc + dc
            if 0 <= nr < h and 0 <= nc < w and labels[nr, nc] == 255:
                nkey = similarity(hsv, sal, nr, nc, pr, pc)
                heapq.heappush(heap, (nkey, lab, nr * w + nc, p))
