"""Per-class IoU and mean IoU over a confusion matrix.

Ground-truth ignore pixels (255) are excluded from all counts. A predicted
255 is kept as its own column so it counts against the ground-truth class
as a false negative without ever matching anything: a prediction must
label every pixel, ignore is a ground-truth-only convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .errors import (
    DimensionMismatch,
    EmptyEvaluation,
    IndexOutOfRange,
    MissingName,
)
from .types import IGNORE, LabelMap

#: PASCAL VOC class names for the default 20-class setup (background first).
VOC_CLASS_NAMES = (
    "background",
    "aeroplane", "bicycle", "bird", "boat", "bottle",
    "bus", "car", "cat", "chair", "cow",
    "diningtable", "dog", "horse", "motorbike", "person",
    "pottedplant", "sheep", "sofa", "train", "tvmonitor",
)


@dataclass(frozen=True)
class ConfusionAccumulator:
    """Pixel counts by (ground truth class, predicted class).

    matrix[g][p] for g, p in 0..C; the extra final column holds pixels
    predicted as ignore. Rows cover background (0) plus C object classes.
    """

    num_classes: int
    matrix: np.ndarray  # (C+1, C+2) int64

    @classmethod
    def empty(cls, num_classes: int) -> "ConfusionAccumulator":
        return cls(num_classes, np.zeros((num_classes + 1, num_classes + 2), dtype=np.int64))

    def total(self) -> int:
        return int(self.matrix.sum())

    def merge(self, other: "ConfusionAccumulator") -> "ConfusionAccumulator":
        if self.num_classes != other.num_classes:
            raise DimensionMismatch("accumulators cover different class counts")
        return ConfusionAccumulator(self.num_classes, self.matrix + other.matrix)


def accumulate(
    acc: ConfusionAccumulator, pred: LabelMap, gt: LabelMap
) -> ConfusionAccumulator:
    """Count pred vs gt pixels into a new accumulator; gt ignore is skipped."""
    if pred.data.shape != gt.data.shape:
        raise DimensionMismatch(
            f"prediction {pred.data.shape} and ground truth {gt.data.shape} differ"
        )
    c = acc.num_classes
    keep = gt.data != IGNORE
    g = gt.data[keep].astype(np.int64)
    p = pred.data[keep].astype(np.int64)
    p = np.where(p == IGNORE, c + 1, p)
    matrix = acc.matrix.copy()
    np.add.at(matrix, (g, p), 1)
    return ConfusionAccumulator(c, matrix)


def iou(acc: ConfusionAccumulator, cls: int) -> float | None:
    """Intersection over union for one class; None when the union is empty."""
    if not 0 <= cls <= acc.num_classes:
        raise IndexOutOfRange(f"class {cls} outside 0..{acc.num_classes}")
    m = acc.matrix
    tp = int(m[cls, cls])
    fp = int(m[:, cls].sum()) - tp
    fn = int(m[cls, :].sum()) - tp
    union = tp + fp + fn
    if union == 0:
        return None
    return tp / union


def mean_iou(acc: ConfusionAccumulator) -> tuple[dict[int, float], float]:
    """Per-class IoUs (classes with an empty union omitted) and their mean."""
    per_class = {}
    for cls in range(acc.num_classes + 1):
        value = iou(acc, cls)
        if value is not None:
            per_class[cls] = value
    if not per_class:
        raise EmptyEvaluation("no class has a nonempty prediction/ground-truth union")
    return per_class, sum(per_class.values()) / len(per_class)


def render_report(
    per_class: Mapping[int, float], class_names: Mapping[int, str]
) -> str:
    """One 'name percent' row per class in index order, then the mIoU row."""
    if not per_class:
        raise EmptyEvaluation("nothing to report")
    lines = []
    for cls in sorted(per_class):
        if cls not in class_names:
            raise MissingName(f"no display name for class {cls}")
        lines.append(f"{class_names[cls]} {100.0 * per_class[cls]:.1f}")
    mean = sum(per_class.values()) / len(per_class)
    lines.append(f"mIoU {100.0 * mean:.1f}")
    return "\n".join(lines)


def render_flat(
    per_class: Mapping[int, float], class_names: Mapping[int, str]
) -> str:
    """Machine-readable 'name=percent' listing with a final miou key."""
    if not per_class:
        raise EmptyEvaluation("nothing to report")
    lines = []
    for cls in sorted(per_class):
        if cls not in class_names:
            raise MissingName(f"no display name for class {cls}")
        lines.append(f"{class_names[cls]}={100.0 * per_class[cls]:.1f}")
    mean = sum(per_class.values()) / len(per_class)
    lines.append(f"miou={100.0 * mean:.1f}")
    return "\n".join(lines)


def default_class_names(num_classes: int) -> dict[int, str]:
    """VOC names for the 20-class setup, generic names otherwise."""
    if num_classes == 20:
        return dict(enumerate(VOC_CLASS_NAMES))
    names = {0: "background"}
    names.update({c: f"class_{c}" for c in range(1, num_classes + 1)})
    return names
