"""PASCAL VOC label colors for visualization output."""

from __future__ import annotations

from pathlib import Path

import numpy as np
from PIL import Image

from .types import LabelMap


def voc_palette() -> np.ndarray:
    """256x3 uint8 palette; color of code n spreads the bits of n over R, G, B.

    Bit 3j of n lands in R at bit 7-j, bit 3j+1 in G, bit 3j+2 in B. Code 0 is
    black, 1 is (128, 0, 0), the ignore code 255 comes out (224, 224, 192).
    """
    palette = np.zeros((256, 3), dtype=np.uint8)
    for n in range(256):
        r = g = b = 0
        c = n
        for j in range(8):
            r |= (c & 1) << (7 - j)
            g |= ((c >> 1) & 1) << (7 - j)
            b |= ((c >> 2) & 1) << (7 - j)
            c >>= 3
        palette[n] = (r, g, b)
    return palette


_PALETTE = voc_palette()


def colorize_labels(labels: LabelMap) -> np.ndarray:
    """Render a label map as an 8-bit RGB image using the VOC palette."""
    return _PALETTE[labels.data]


def write_palette_png(labels: LabelMap, path: str | Path) -> None:
    """Write a palette-indexed PNG whose indices are the label codes."""
    img = Image.fromarray(labels.data, mode="P")
    img.putpalette(_PALETTE.reshape(-1).tolist())
    img.save(path, format="PNG")
