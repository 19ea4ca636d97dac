"""Saliency-guided seeded region growing.

Seed labels expand across the pixel grid by repeatedly admitting the
globally most similar (labeled, unlabeled-neighbor) pair whose similarity
beats the threshold; grown pixels act as new seeds. The hot kernel has two
interchangeable backends with bit-identical output:

* ``numba`` - @njit-compiled priority front (default when numba imports)
* ``python`` - plain heapq implementation, no compilation

Select one explicitly via the ``backend=`` argument or the
``SEEDGROW_BACKEND`` environment variable; the choice never affects
results, only speed. Verification references (a heap-free scan oracle and
a reachability flood fill) live alongside in this package.
"""

from __future__ import annotations

import os

from ..errors import DimensionMismatch, OutOfBounds
from ..types import GrowConfig, HsvImage, LabelMap, SaliencyMap
from ._oracle import grow_regions_oracle, reachable_set
from ._pykernel import grow_kernel as _grow_python
from ._pykernel import similarity as _similarity

try:
    from ._numbakernel import grow_kernel as _grow_numba

    HAS_NUMBA = True
except ImportError:
    _grow_numba = None
    HAS_NUMBA = False

BACKEND_ENV_VAR = "SEEDGROW_BACKEND"

__all__ = [
    "BACKEND_ENV_VAR",
    "HAS_NUMBA",
    "available_backends",
    "grow_regions",
    "grow_regions_oracle",
    "growing_predicate",
    "pixel_similarity",
    "reachable_set",
]


def available_backends() -> tuple[str, ...]:
    return ("numba", "python") if HAS_NUMBA else ("python",)


def _resolve_backend(backend: str | None) -> str:
    name = backend or os.environ.get(BACKEND_ENV_VAR, "").strip().lower()
    if not name:
        return "numba" if HAS_NUMBA else "python"
    if name == "numba" and not HAS_NUMBA:
        raise ValueError("numba backend requested but numba is not importable")
    if name not in ("numba", "python"):
        raise ValueError(f"unknown backend {name!r} (expected 'numba' or 'python')")
    return name


def pixel_similarity(
    img: HsvImage, sal: SaliencyMap, i: tuple[int, int], j: tuple[int, int]
) -> float:
    """Saliency-weighted color distance between pixels i and j, as (row, col).

    exp(|S(i) - S(j)|) times the Euclidean HSV distance with circular hue;
    exactly symmetric in its arguments.
    """
    if img.data.shape[:2] != sal.data.shape:
        raise DimensionMismatch("image and saliency map must share dimensions")
    h, w = sal.data.shape
    for r, c in (i, j):
        if not (0 <= r < h and 0 <= c < w):
            raise OutOfBounds(f"pixel ({r}, {c}) outside {h}x{w} image")
    return _similarity(img.data, sal.data, i[0], i[1], j[0], j[1])


def growing_predicate(sim: float, theta: float) -> bool:
    """True iff the similarity admits growth: sim strictly below theta."""
    return sim < theta


def grow_regions(
    img: HsvImage,
    sal: SaliencyMap,
    seeds: LabelMap,
    cfg: GrowConfig,
    backend: str | None = None,
) -> LabelMap:
    """Expand seed labels over the image; unreached pixels stay ignore (255).

    Deterministic: candidates are admitted in lexicographic
    (similarity, label, target index, source index) order, so identical
    inputs give byte-identical outputs on every backend.
    """
    if not (img.data.shape[:2] == sal.data.shape == seeds.data.shape):
        raise DimensionMismatch(
            f"image {img.data.shape[:2]}, saliency {sal.data.shape}, "
            f"seeds {seeds.data.shape} must share dimensions"
        )
    kernel = _grow_numba if _resolve_backend(backend) == "numba" else _grow_python
    labels = seeds.data.copy()
    kernel(img.data, sal.data, labels, float(cfg.theta), cfg.connectivity)
    return LabelMap(labels)
