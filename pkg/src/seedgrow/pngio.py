"""PNG loading/saving and the image-to-domain-type adapters.

Inputs: 8-bit RGB photos, 8-bit grayscale saliency, 8-bit single-channel
label maps (plain grayscale or palette-indexed; palette indices are the
label codes). Outputs are written without ancillary chunks, so identical
pixels produce identical files.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image

from .errors import InvalidLabelCode
from .types import IGNORE, LabelMap, SaliencyMap


def normalize_saliency(gray: np.ndarray) -> SaliencyMap:
    """Map an 8-bit single-channel image onto [0, 1] by dividing by 255."""
    arr = np.asarray(gray)
    return SaliencyMap(arr.astype(np.float64) / 255.0)


def decode_label_map(gray: np.ndarray, num_classes: int) -> LabelMap:
    """Validate an 8-bit single-channel image as label codes {0..C} | {255}."""
    arr = np.asarray(gray)
    bad = (arr > num_classes) & (arr != IGNORE)
    if bad.any():
        code = int(arr[bad][0])
        raise InvalidLabelCode(f"label code {code} outside 0..{num_classes} and 255")
    return LabelMap(arr.astype(np.uint8))


def read_rgb_png(path: str | Path) -> np.ndarray:
    with Image.open(path) as img:
        return np.asarray(img.convert("RGB"))


def read_single_channel_png(path: str | Path) -> np.ndarray:
    """Read a grayscale or palette-indexed PNG as raw 8-bit codes."""
    with Image.open(path) as img:
        if img.mode in ("L", "P"):
            return np.asarray(img)
        raise InvalidLabelCode(
            f"{path}: expected a single-channel image, got mode {img.mode}"
        )


def load_saliency(path: str | Path) -> SaliencyMap:
    with Image.open(path) as img:
        return normalize_saliency(np.asarray(img.convert("L")))


def load_label_map(path: str | Path, num_classes: int) -> LabelMap:
    return decode_label_map(read_single_channel_png(path), num_classes)


def write_label_png(labels: LabelMap, path: str | Path) -> None:
    Image.fromarray(labels.data, mode="L").save(path, format="PNG")


def write_rgb_png(rgb: np.ndarray, path: str | Path) -> None:
    Image.fromarray(np.asarray(rgb, dtype=np.uint8), mode="RGB").save(path, format="PNG")


def write_gray_png(gray: np.ndarray, path: str | Path) -> None:
    Image.fromarray(np.asarray(gray, dtype=np.uint8), mode="L").save(path, format="PNG")
