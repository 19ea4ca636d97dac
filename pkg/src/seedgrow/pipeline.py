"""Manifest-driven batch runs: seed, grow, and evaluate.

Per entry the pipeline decodes the inputs, builds one activation map per
present class (weight row c-1 scores object class c), upsamples each to
image resolution, extracts seeds, grows them, writes

    <image_id>_seeds.png    8-bit label codes, seeds only
    <image_id>_labels.png   8-bit label codes, grown
    <image_id>_vis.png      palette-indexed visualization of the grown map

into a flat output directory, and, when ground truth is present,
accumulates the confusion counts. Entries are independent, so they may run
on several workers; outputs and the summary keep manifest order either way.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from . import cam as cam_ops
from . import pngio
from .codec import decode_tensor
from .color import rgb_to_hsv
from .errors import DimensionMismatch, SeedGrowError
from .evaluate import (
    ConfusionAccumulator,
    accumulate,
    default_class_names,
    mean_iou,
    render_flat,
    render_report,
)
from .manifest import ManifestEntry
from .palette import write_palette_png
from .srg import grow_regions
from .types import ActivationStack, Cam, ClassWeights, GrowConfig


@dataclass(frozen=True)
class EntryOutcome:
    image_id: str
    error: str | None = None
    ignore_fraction: float | None = None
    evaluated: bool = False

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass(frozen=True)
class PipelineSummary:
    outcomes: tuple[EntryOutcome, ...]
    per_class: dict[int, float] | None
    miou: float | None
    class_names: Mapping[int, str]

    @property
    def failed(self) -> int:
        return sum(1 for o in self.outcomes if not o.ok)

    def report(self, flat: bool = False) -> str | None:
        if self.per_class is None:
            return None
        renderer = render_flat if flat else render_report
        return renderer(self.per_class, self.class_names)

    def render(self) -> str:
        lines = [f"processed {len(self.outcomes)} entries ({self.failed} failed)"]
        for o in self.outcomes:
            if not o.ok:
                lines.append(f"  {o.image_id}: ERROR: {o.error}")
            elif o.ignore_fraction is not None:
                lines.append(f"  {o.image_id}: ignore fraction {o.ignore_fraction:.4f}")
            else:
                lines.append(f"  {o.image_id}: ok")
        if self.per_class is not None:
            lines.append("evaluation:")
            lines.extend("  " + row for row in self.report().splitlines())
        return "\n".join(lines)


def build_cams(
    acts: ActivationStack,
    weights: ClassWeights,
    present_classes,
    out_h: int,
    out_w: int,
) -> dict[int, Cam]:
    """Image-resolution activation map per present class (row = class - 1)."""
    cams = {}
    for cls in present_classes:
        cam = cam_ops.class_activation_map(acts, weights, cls - 1)
        cams[cls] = cam_ops.upsample_bilinear(cam, out_h, out_w)
    return cams


def process_entry(
    entry: ManifestEntry,
    cfg: GrowConfig,
    out_dir: Path,
    *,
    do_grow: bool = True,
    do_eval: bool = True,
    backend: str | None = None,
) -> tuple[EntryOutcome, ConfusionAccumulator | None]:
    """Run one manifest entry; returns its outcome and, if evaluated, counts."""
    hsv = rgb_to_hsv(pngio.read_rgb_png(entry.image_path))
    sal = pngio.load_saliency(entry.saliency_path)
    if (sal.height, sal.width) != (hsv.height, hsv.width):
        raise DimensionMismatch(
            f"saliency {sal.height}x{sal.width} vs image {hsv.height}x{hsv.width}"
        )
    acts = decode_tensor(entry.activations_path.read_bytes())
    weights = decode_tensor(entry.weights_path.read_bytes())
    if not isinstance(acts, ActivationStack):
        raise DimensionMismatch(f"{entry.activations_path}: expected a rank-3 tensor")
    if not isinstance(weights, ClassWeights):
        raise DimensionMismatch(f"{entry.weights_path}: expected a rank-2 tensor")

    cams = build_cams(acts, weights, entry.present_classes, hsv.height, hsv.width)
    seeds = cam_ops.extract_seeds(cams, entry.present_classes, sal, cfg)
    pngio.write_label_png(seeds, out_dir / f"{entry.image_id}_seeds.png")

    if not do_grow:
        return EntryOutcome(entry.image_id, ignore_fraction=seeds.ignore_fraction()), None

    labels = grow_regions(hsv, sal, seeds, cfg, backend=backend)
    pngio.write_label_png(labels, out_dir / f"{entry.image_id}_labels.png")
    write_palette_png(labels, out_dir / f"{entry.image_id}_vis.png")
    outcome = EntryOutcome(entry.image_id, ignore_fraction=labels.ignore_fraction())

    if do_eval and entry.gt_path is not None:
        gt = pngio.load_label_map(entry.gt_path, cfg.num_classes)
        counts = accumulate(ConfusionAccumulator.empty(cfg.num_classes), labels, gt)
        return EntryOutcome(
            entry.image_id, ignore_fraction=outcome.ignore_fraction, evaluated=True
        ), counts
    return outcome, None


def run_pipeline(
    entries: list[ManifestEntry],
    cfg: GrowConfig,
    out_dir: str | Path,
    *,
    do_grow: bool = True,
    do_eval: bool = True,
    strict: bool = False,
    jobs: int = 1,
    backend: str | None = None,
) -> PipelineSummary:
    """Process all entries; failures are recorded and skipped unless strict."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    def run_one(entry: ManifestEntry):
        try:
            return process_entry(
                entry, cfg, out_dir, do_grow=do_grow, do_eval=do_eval, backend=backend
            )
        except (SeedGrowError, OSError) as exc:
            if strict:
                raise
            return EntryOutcome(entry.image_id, error=str(exc)), None

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_one, entries))
    else:
        results = [run_one(entry) for entry in entries]

    total: ConfusionAccumulator | None = None
    for _, counts in results:
        if counts is not None:
            total = counts if total is None else total.merge(counts)

    per_class = miou = None
    if total is not None:
        per_class, miou = mean_iou(total)

    return PipelineSummary(
        outcomes=tuple(outcome for outcome, _ in results),
        per_class=per_class,
        miou=miou,
        class_names=default_class_names(cfg.num_classes),
    )


def evaluate_predictions(
    entries: list[ManifestEntry], pred_dir: str | Path, cfg: GrowConfig
) -> PipelineSummary:
    """Score <image_id>_labels.png files in pred_dir against manifest ground truth."""
    pred_dir = Path(pred_dir)
    total = ConfusionAccumulator.empty(cfg.num_classes)
    outcomes = []
    for entry in entries:
        if entry.gt_path is None:
            outcomes.append(EntryOutcome(entry.image_id))
            continue
        pred = pngio.load_label_map(pred_dir / f"{entry.image_id}_labels.png", cfg.num_classes)
        gt = pngio.load_label_map(entry.gt_path, cfg.num_classes)
        total = accumulate(total, pred, gt)
        outcomes.append(
            EntryOutcome(entry.image_id, ignore_fraction=pred.ignore_fraction(), evaluated=True)
        )
    per_class, miou = mean_iou(total)
    return PipelineSummary(
        outcomes=tuple(outcomes),
        per_class=per_class,
        miou=miou,
        class_names=default_class_names(cfg.num_classes),
    )
