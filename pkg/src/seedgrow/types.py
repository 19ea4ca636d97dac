"""Core domain types.

All types wrap a validated, read-only numpy array in a canonical dtype and
are immutable after construction, so they are safe to share across threads.
Label maps use the PASCAL VOC convention: 0 is background, 1..C are object
classes, 255 means ignore/unlabeled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NonFiniteValue

IGNORE = 255
BACKGROUND = 0


def _freeze(arr: np.ndarray) -> np.ndarray:
    # Copy writable inputs so the caller's buffer is neither aliased nor
    # frozen in place; already read-only arrays are referenced as-is.
    arr = np.ascontiguousarray(arr)
    if arr.flags.writeable:
        arr = arr.copy()
        arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class HsvImage:
    """Per-pixel HSV color, every channel scaled to [0, 255].

    Hue is compressed from 360 degrees onto [0, 255) and wraps circularly.
    """

    data: np.ndarray  # (H, W, 3) float64

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=np.float64)
        if arr.ndim != 3 or arr.shape[2] != 3:
            raise DimensionMismatch(f"HSV image must be (H, W, 3), got {arr.shape}")
        if not np.isfinite(arr).all():
            raise NonFiniteValue("HSV image contains NaN or Inf")
        if arr.size and (arr.min() < 0.0 or arr.max() > 255.0):
            raise ValueError("HSV channels must lie in [0, 255]")
        object.__setattr__(self, "data", _freeze(arr))

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]


@dataclass(frozen=True, eq=False)
class SaliencyMap:
    """Per-pixel saliency in [0, 1]."""

    data: np.ndarray  # (H, W) float64

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=np.float64)
        if arr.ndim != 2:
            raise DimensionMismatch(f"saliency map must be (H, W), got {arr.shape}")
        if not np.isfinite(arr).all():
            raise NonFiniteValue("saliency map contains NaN or Inf")
        if arr.size and (arr.min() < 0.0 or arr.max() > 1.0):
            raise ValueError("saliency values must lie in [0, 1]")
        object.__setattr__(self, "data", _freeze(arr))

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]


@dataclass(frozen=True, eq=False)
class ActivationStack:
    """Stack of K feature maps, channel-major: shape (K, H, W), float32."""

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=np.float32)
        if arr.ndim != 3:
            raise DimensionMismatch(f"activation stack must be (K, H, W), got {arr.shape}")
        if not np.isfinite(arr).all():
            raise NonFiniteValue("activation stack contains NaN or Inf")
        object.__setattr__(self, "data", _freeze(arr))

    @property
    def channels(self) -> int:
        return self.data.shape[0]

    @property
    def height(self) -> int:
        return self.data.shape[1]

    @property
    def width(self) -> int:
        return self.data.shape[2]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ActivationStack)
            and self.data.shape == other.data.shape
            and self.data.tobytes() == other.data.tobytes()
        )


@dataclass(frozen=True, eq=False)
class ClassWeights:
    """Per-class channel weights: shape (C, K), float32. Row c-1 scores object class c."""

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=np.float32)
        if arr.ndim != 2:
            raise DimensionMismatch(f"class weights must be (C, K), got {arr.shape}")
        if not np.isfinite(arr).all():
            raise NonFiniteValue("class weights contain NaN or Inf")
        object.__setattr__(self, "data", _freeze(arr))

    @property
    def num_classes(self) -> int:
        return self.data.shape[0]

    @property
    def channels(self) -> int:
        return self.data.shape[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClassWeights)
            and self.data.shape == other.data.shape
            and self.data.tobytes() == other.data.tobytes()
        )


@dataclass(frozen=True, eq=False)
class LabelMap:
    """Per-pixel label codes: shape (H, W), uint8. 255 means ignore."""

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data)
        if arr.ndim != 2:
            raise DimensionMismatch(f"label map must be (H, W), got {arr.shape}")
        if arr.dtype != np.uint8:
            if arr.size and (arr.min() < 0 or arr.max() > 255):
                raise ValueError("label codes must fit in uint8")
            arr = arr.astype(np.uint8)
        object.__setattr__(self, "data", _freeze(arr))

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    def ignore_fraction(self) -> float:
        if self.data.size == 0:
            return 0.0
        return float(np.count_nonzero(self.data == IGNORE) / self.data.size)


@dataclass(frozen=True, eq=False)
class Cam:
    """One class's activation map over a spatial grid: shape (H, W), float64."""

    data: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.data, dtype=np.float64)
        if arr.ndim != 2:
            raise DimensionMismatch(f"cam must be (H, W), got {arr.shape}")
        if not np.isfinite(arr).all():
            raise NonFiniteValue("cam contains NaN or Inf")
        object.__setattr__(self, "data", _freeze(arr))

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]


@dataclass(frozen=True)
class ImageLabels:
    """Ordered set of object classes present at image level (indices in 1..254)."""

    present_classes: tuple[int, ...]

    def __post_init__(self):
        classes = tuple(int(c) for c in self.present_classes)
        for c in classes:
            if not 1 <= c <= 254:
                raise ValueError(f"class index {c} outside 1..254")
        if any(a >= b for a, b in zip(classes, classes[1:])):
            raise ValueError("class indices must be strictly increasing")
        object.__setattr__(self, "present_classes", classes)

    def __iter__(self):
        return iter(self.present_classes)

    def __len__(self) -> int:
        return len(self.present_classes)


@dataclass(frozen=True)
class GrowConfig:
    """Knobs for seed extraction and region growing.

    theta is the similarity threshold of the growing predicate, in the same
    units as the HSV color distance (channels scaled to [0, 255]).
    """

    theta: float = 10.0
    connectivity: int = 4
    seed_fraction: float = 0.2
    bg_saliency_threshold: float = 0.1
    num_classes: int = 20

    def __post_init__(self):
        if not self.theta > 0:
            raise ValueError("theta must be > 0")
        if self.connectivity not in (4, 8):
            raise ValueError("connectivity must be 4 or 8")
        if not 0.0 < self.seed_fraction <= 1.0:
            raise ValueError("seed_fraction must be in (0, 1]")
        if not 0.0 <= self.bg_saliency_threshold <= 1.0:
            raise ValueError("bg_saliency_threshold must be in [0, 1]")
        if not 1 <= self.num_classes <= 254:
            raise ValueError("num_classes must be in 1..254")
