"""Shared generators for randomized instances and the synthetic dataset."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from seedgrow import (
    ActivationStack,
    ClassWeights,
    GrowConfig,
    HsvImage,
    LabelMap,
    SaliencyMap,
    encode_tensor,
)
from seedgrow.pngio import write_gray_png, write_rgb_png

THETAS = (1.0, 5.0, 10.0, 50.0)


def random_instance(
    rng: np.random.Generator,
    max_side: int = 12,
    min_side: int = 1,
    theta: float | None = None,
    connectivity: int | None = None,
):
    """Random grid with random HSV, saliency, and scattered seeds (0..4, 255)."""
    h = int(rng.integers(min_side, max_side + 1))
    w = int(rng.integers(min_side, max_side + 1))
    img = HsvImage(rng.uniform(0.0, 255.0, size=(h, w, 3)))
    sal = SaliencyMap(rng.uniform(0.0, 1.0, size=(h, w)))

    n_classes = int(rng.integers(1, 5))
    seeds = np.full((h, w), 255, dtype=np.uint8)
    n_seeds = int(rng.integers(1, max(2, (h * w) // 6) + 1))
    rows = rng.integers(0, h, size=n_seeds)
    cols = rng.integers(0, w, size=n_seeds)
    labs = rng.integers(0, n_classes + 1, size=n_seeds)  # 0 = background seed
    seeds[rows, cols] = labs

    cfg = GrowConfig(
        theta=float(rng.choice(THETAS)) if theta is None else theta,
        connectivity=int(rng.choice((4, 8))) if connectivity is None else connectivity,
    )
    return img, sal, LabelMap(seeds), cfg


# Synthetic end-to-end dataset: 16x16 images of one or two 8x8 colored
# squares on a dark background, activations that are exactly the square
# masks, saliency high inside and low outside.

FIXTURE_SIZE = 16
FIXTURE_SQUARE = 8
FIXTURE_BG_COLOR = (30, 30, 36)
FIXTURE_CLASS_COLORS = {
    1: (220, 40, 40),
    2: (40, 200, 50),
    3: (40, 90, 220),
    4: (230, 210, 40),
}
FIXTURE_SAL_INSIDE = 230  # ~0.902 after normalization
FIXTURE_SAL_OUTSIDE = 13  # ~0.051, below the 0.1 background threshold


def build_fixture_dataset(root: Path, n_entries: int = 20, seed: int = 20) -> Path:
    """Write images, saliency, tensors, ground truth, and a manifest; return the manifest path."""
    root.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(seed)
    n = FIXTURE_SIZE
    sq = FIXTURE_SQUARE

    weights = ClassWeights(np.eye(len(FIXTURE_CLASS_COLORS), dtype=np.float32))
    (root / "weights.sgt").write_bytes(encode_tensor(weights))

    lines = []
    for i in range(n_entries):
        image_id = f"img{i:02d}"
        if i % 2 == 0:
            classes = [int(rng.integers(1, 5))]
        else:
            classes = sorted(int(c) for c in rng.choice(4, size=2, replace=False) + 1)
        positions = [(0, 0), (sq, sq)][: len(classes)]

        rgb = np.full((n, n, 3), FIXTURE_BG_COLOR, dtype=np.uint8)
        gt = np.zeros((n, n), dtype=np.uint8)
        sal = np.full((n, n), FIXTURE_SAL_OUTSIDE, dtype=np.uint8)
        acts = np.zeros((len(FIXTURE_CLASS_COLORS), n, n), dtype=np.float32)
        for cls, (r0, c0) in zip(classes, positions):
            rgb[r0:r0 + sq, c0:c0 + sq] = FIXTURE_CLASS_COLORS[cls]
            gt[r0:r0 + sq, c0:c0 + sq] = cls
            sal[r0:r0 + sq, c0:c0 + sq] = FIXTURE_SAL_INSIDE
            acts[cls - 1, r0:r0 + sq, c0:c0 + sq] = 1.0

        write_rgb_png(rgb, root / f"{image_id}.png")
        write_gray_png(sal, root / f"{image_id}_sal.png")
        write_gray_png(gt, root / f"{image_id}_gt.png")
        (root / f"{image_id}_acts.sgt").write_bytes(encode_tensor(ActivationStack(acts)))
        lines.append(
            f"{image_id},{image_id}.png,{image_id}_sal.png,"
            f"{image_id}_acts.sgt,weights.sgt,{image_id}_gt.png,"
            + ";".join(str(c) for c in classes)
        )

    manifest = root / "manifest.csv"
    manifest.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return manifest
