"""Batch manifest: one record per line, comma-separated.

    image_id,image_path,saliency_path,activations_path,weights_path,gt_path,classes

`classes` is a semicolon-separated list of object class indices (may be
empty); `gt_path` may be empty, in which case the entry is skipped during
evaluation. Relative paths are resolved against the manifest's directory.
Blank lines are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import DuplicateId, EmptyManifest, MalformedLine
from .types import ImageLabels

_FIELDS = 7


@dataclass(frozen=True)
class ManifestEntry:
    image_id: str
    image_path: Path
    saliency_path: Path
    activations_path: Path
    weights_path: Path
    gt_path: Path | None
    present_classes: ImageLabels


def _parse_classes(field: str, line_no: int) -> ImageLabels:
    if field == "":
        return ImageLabels(())
    try:
        classes = [int(part) for part in field.split(";")]
    except ValueError:
        raise MalformedLine(line_no, f"classes field {field!r} is not ';'-separated integers")
    if len(set(classes)) != len(classes):
        raise MalformedLine(line_no, f"duplicate class index in {field!r}")
    try:
        return ImageLabels(tuple(sorted(classes)))
    except ValueError as exc:
        raise MalformedLine(line_no, str(exc))


def parse_manifest(text: str, base_dir: str | Path | None = None) -> list[ManifestEntry]:
    """Parse manifest text into validated entries."""
    base = Path(base_dir) if base_dir is not None else Path(".")
    entries: list[ManifestEntry] = []
    seen: set[str] = set()

    for line_no, raw in enumerate(text.splitlines(), start=1):
        if raw.strip() == "":
            continue
        fields = raw.split(",")
        if len(fields) != _FIELDS:
            raise MalformedLine(line_no, f"expected {_FIELDS} comma-separated fields, got {len(fields)}")
        image_id, image_path, sal_path, acts_path, weights_path, gt_path, classes = fields
        if image_id == "":
            raise MalformedLine(line_no, "empty image_id")
        for name, value in (
            ("image_path", image_path),
            ("saliency_path", sal_path),
            ("activations_path", acts_path),
            ("weights_path", weights_path),
        ):
            if value == "":
                raise MalformedLine(line_no, f"empty {name}")
        if image_id in seen:
            raise DuplicateId(f"image_id {image_id!r} appears more than once")
        seen.add(image_id)
        entries.append(
            ManifestEntry(
                image_id=image_id,
                image_path=base / image_path,
                saliency_path=base / sal_path,
                activations_path=base / acts_path,
                weights_path=base / weights_path,
                gt_path=base / gt_path if gt_path else None,
                present_classes=_parse_classes(classes, line_no),
            )
        )

    if not entries:
        raise EmptyManifest("manifest contains no entries")
    return entries


def load_manifest(path: str | Path) -> list[ManifestEntry]:
    """Read and parse a manifest file; relative paths resolve against it."""
    path = Path(path)
    return parse_manifest(path.read_text(encoding="utf-8"), base_dir=path.parent)
