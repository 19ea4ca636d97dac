"""Brute-force references for the growing kernels.

grow_regions_oracle re-derives the same contract as the production kernels
with no priority queue: every step rescans all (labeled pixel, unlabeled
neighbor) pairs for the lexicographically smallest admissible candidate.
O(n^2 * steps), meant for small grids and audits, not production use.
"""

from __future__ import annotations

from collections import deque

import numpy as np

from ..errors import DimensionMismatch
from ..types import GrowConfig, HsvImage, LabelMap, SaliencyMap
from ._pykernel import OFFSETS, similarity


def _neighbor_table(h: int, w: int, connectivity: int) -> list[list[int]]:
    offsets = OFFSETS[:connectivity]
    table = []
    for r in range(h):
        for c in range(w):
            cell = []
            for dr, dc in offsets:
                nr, nc = r + dr, c + dc
                if 0 <= nr < h and 0 <= nc < w:
                    cell.append(nr * w + nc)
            table.append(cell)
    return table


def _edge_similarities(
    hsv: np.ndarray, sal: np.ndarray, neigh: list[list[int]], w: int
) -> dict[tuple[int, int], float]:
    sims = {}
    for q, cell in enumerate(neigh):
        qr, qc = divmod(q, w)
        for p in cell:
            pr, pc = divmod(p, w)
            sims[(p, q)] = similarity(hsv, sal, pr, pc, qr, qc)
    return sims


def grow_regions_oracle(
    img: HsvImage, sal: SaliencyMap, seeds: LabelMap, cfg: GrowConfig
) -> LabelMap:
    """Same contract as grow_regions, computed by naive repeated full scans.

    Edge similarities are tabulated once up front (they are a pure function
    of the fixed inputs); the candidate selection itself rescans the whole
    frontier every step.
    """
    if not (img.data.shape[:2] == sal.data.shape == seeds.data.shape):
        raise DimensionMismatch("image, saliency, and seeds must share dimensions")
    h, w = seeds.data.shape
    n = h * w
    neigh = _neighbor_table(h, w, cfg.connectivity)
    sims = _edge_similarities(img.data, sal.data, neigh, w)
    theta = float(cfg.theta)

    labels = [int(v) for v in seeds.data.reshape(-1)]
    while True:
        best = None
        for q in range(n):
            lab = labels[q]
            if lab == 255:
                continue
            for p in neigh[q]:
                if labels[p] != 255:
                    continue
                key = sims[(p, q)]
                if key < theta:
                    cand = (key, lab, p, q)
                    if best is None or cand < best:
                        best = cand
        if best is None:
            break
        labels[best[2]] = best[1]

    return LabelMap(np.array(labels, dtype=np.uint8).reshape(h, w))


def reachable_set(
    img: HsvImage,
    sal: SaliencyMap,
    seeds: LabelMap,
    theta: float,
    connectivity: int,
) -> np.ndarray:
    """Boolean mask of pixels reachable from any seed via steps with sim < theta.

    Label-agnostic flood fill; characterizes exactly the set of pixels any
    growing run can label.
    """
    if not (img.data.shape[:2] == sal.data.shape == seeds.data.shape):
        raise DimensionMismatch("image, saliency, and seeds must share dimensions")
    h, w = seeds.data.shape
    neigh = _neighbor_table(h, w, connectivity)
    sims = _edge_similarities(img.data, sal.data, neigh, w)

    flat = seeds.data.reshape(-1)
    mask = flat != 255
    queue = deque(np.flatnonzero(mask).tolist())
    while queue:
        q = queue.popleft()
        for p in neigh[q]:
            if not mask[p] and sims[(p, q)] < theta:
                mask[p] = True
                queue.append(p)
    return mask.reshape(h, w)
