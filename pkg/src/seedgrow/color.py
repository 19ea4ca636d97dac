"""RGB to HSV conversion with all channels scaled to [0, 255]."""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch
from .types import HsvImage


def rgb_to_hsv(rgb: np.ndarray) -> HsvImage:
    """Convert a row-major 8-bit RGB image to HSV.

    Hue in [0, 360) is rescaled to [0, 255); saturation and value are scaled
    to [0, 255]. Degenerate hue (gray pixels) is 0.
    """
    arr = np.asarray(rgb)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise DimensionMismatch(f"RGB image must be (H, W, 3), got {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() > 255):
        raise ValueError("RGB channels must lie in [0, 255]")
    arr = arr.astype(np.float64)

    r, g, b = arr[..., 0], arr[..., 1], arr[..., 2]
    maxc = arr.max(axis=2)
    minc = arr.min(axis=2)
    delta = maxc - minc

    safe_max = np.where(maxc == 0.0, 1.0, maxc)
    s = np.where(maxc == 0.0, 0.0, delta / safe_max) * 255.0

    # Sextant formula; ties resolved in channel order r, g, b.
    safe_delta = np.where(delta == 0.0, 1.0, delta)
    r_max = r == maxc
    g_max = (g == maxc) & ~r_max
    h6 = np.select(
        [delta == 0.0, r_max, g_max],
        [0.0, ((g - b) / safe_delta) % 6.0, (b - r) / safe_delta + 2.0],
        default=(r - g) / safe_delta + 4.0,
    )
    h = h6 * (255.0 / 6.0)

    return HsvImage(np.stack([h, s, maxc], axis=-1))
