"""Class activation maps and high-confidence seed extraction.

A class activation map is the per-pixel weighted sum of the final conv
feature maps, using that class's score weights. Pixels ranking in the top
seed_fraction of a class's map become seeds for that class; pixels no class
claims and with low saliency become background seeds; everything else is
left as ignore.
"""

from __future__ import annotations

import math
from typing import Mapping

import numpy as np

from .errors import (
    ChannelMismatch,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidLabelCode,
    MissingCam,
)
from .types import (
    IGNORE,
    ActivationStack,
    Cam,
    ClassWeights,
    GrowConfig,
    ImageLabels,
    LabelMap,
    SaliencyMap,
)


def global_average_pool(acts: ActivationStack) -> np.ndarray:
    """Reduce each feature channel to its spatial sum.

    The 1/(H*W) factor of a true mean is omitted; it is constant per image
    and cannot change per-class comparisons.
    """
    return acts.data.sum(axis=(1, 2), dtype=np.float64)


def class_score(pooled: np.ndarray, weights: ClassWeights, class_row: int) -> float:
    """Linear class score: dot product of pooled features with the class row."""
    pooled = np.asarray(pooled, dtype=np.float64)
    if pooled.shape != (weights.channels,):
        raise ChannelMismatch(
            f"pooled vector has {pooled.shape} entries, weights expect {weights.channels}"
        )
    if not 0 <= class_row < weights.num_classes:
        raise IndexOutOfRange(f"class row {class_row} outside 0..{weights.num_classes - 1}")
    return float(weights.data[class_row].astype(np.float64) @ pooled)


def class_activation_map(
    acts: ActivationStack, weights: ClassWeights, class_row: int
) -> Cam:
    """Per-pixel weighted sum of feature maps for one class row."""
    if acts.channels != weights.channels:
        raise ChannelMismatch(
            f"stack has {acts.channels} channels, weights expect {weights.channels}"
        )
    if not 0 <= class_row < weights.num_classes:
        raise IndexOutOfRange(f"class row {class_row} outside 0..{weights.num_classes - 1}")
    w = weights.data[class_row].astype(np.float64)
    m = np.tensordot(w, acts.data.astype(np.float64), axes=1)
    return Cam(m)


def upsample_bilinear(cam: Cam, out_h: int, out_w: int) -> Cam:
    """Resample a map with corner-aligned bilinear interpolation.

    Corner cells map exactly onto corner pixels, so resampling to the input
    size is the identity and a 1x1 input broadcasts its value.
    """
    if out_h < 1 or out_w < 1:
        raise DimensionMismatch(f"output size must be >= 1x1, got {out_h}x{out_w}")
    src = cam.data
    in_h, in_w = src.shape

    def axis_positions(n_in: int, n_out: int) -> np.ndarray:
        if n_out == 1 or n_in == 1:
            return np.zeros(n_out)
        pos = np.arange(n_out) * ((n_in - 1) / (n_out - 1))
        pos[-1] = n_in - 1  # pin the far corner; the product can be an ulp off
        return pos

    ys = axis_positions(in_h, out_h)
    xs = axis_positions(in_w, out_w)
    y0 = np.minimum(ys.astype(np.int64), max(in_h - 2, 0))
    x0 = np.minimum(xs.astype(np.int64), max(in_w - 2, 0))
    y1 = np.minimum(y0 + 1, in_h - 1)
    x1 = np.minimum(x0 + 1, in_w - 1)
    fy = (ys - y0)[:, None]
    fx = (xs - x0)[None, :]

    out = (
        src[np.ix_(y0, x0)] * (1.0 - fy) * (1.0 - fx)
        + src[np.ix_(y0, x1)] * (1.0 - fy) * fx
        + src[np.ix_(y1, x0)] * fy * (1.0 - fx)
        + src[np.ix_(y1, x1)] * fy * fx
    )
    return Cam(out)


def extract_seeds(
    cams: Mapping[int, Cam],
    labels: ImageLabels,
    sal: SaliencyMap,
    cfg: GrowConfig,
) -> LabelMap:
    """Turn per-class activation maps into a sparse seed label map.

    Per class, the map is min-max normalized and the top
    ceil(seed_fraction * N) pixels are claimed (value descending, ties by
    row-major index). A pixel claimed by several classes goes to the larger
    normalized value, exact ties to the smaller class index. Unclaimed
    pixels with saliency below bg_saliency_threshold become background;
    the rest are ignore. A constant map claims nothing.
    """
    h, w = sal.height, sal.width
    n = h * w
    budget = math.ceil(cfg.seed_fraction * n)

    best_value = np.full(n, -np.inf)
    winner = np.full(n, IGNORE, dtype=np.uint8)
    claimed = np.zeros(n, dtype=bool)

    for cls in labels:
        if cls > cfg.num_classes:
            raise InvalidLabelCode(
                f"present class {cls} exceeds num_classes={cfg.num_classes}"
            )
        if cls not in cams:
            raise MissingCam(f"no activation map for present class {cls}")
        cam = cams[cls]
        if (cam.height, cam.width) != (h, w):
            raise DimensionMismatch(
                f"cam for class {cls} is {cam.height}x{cam.width}, saliency is {h}x{w}"
            )
        values = cam.data.reshape(-1)
        lo = values.min()
        hi = values.max()
        if hi == lo:
            continue
        normalized = (values - lo) / (hi - lo)
        # Stable sort on the negated values: descending value, ties by index.
        top = np.argsort(-normalized, kind="stable")[:budget]
        claimed[top] = True
        stronger = normalized[top] > best_value[top]
        take = top[stronger]
        best_value[take] = normalized[take]
        winner[take] = cls

    background = ~claimed & (sal.data.reshape(-1) < cfg.bg_saliency_threshold)
    winner[background] = 0
    return LabelMap(winner.reshape(h, w))
