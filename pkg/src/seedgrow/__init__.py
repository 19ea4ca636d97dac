"""Weak image-level labels to dense pixel-level pseudo-labels.

Pipeline: class activation maps from pooled conv features -> top-fraction
seed extraction -> saliency-guided seeded region growing -> per-class
IoU/mIoU evaluation. See the cli module for the batch interface.
"""

from .cam import (
    class_activation_map,
    class_score,
    extract_seeds,
    global_average_pool,
    upsample_bilinear,
)
from .codec import decode_tensor, encode_tensor
from .color import rgb_to_hsv
from .evaluate import (
    ConfusionAccumulator,
    accumulate,
    iou,
    mean_iou,
    render_flat,
    render_report,
)
from .manifest import ManifestEntry, load_manifest, parse_manifest
from .palette import colorize_labels, voc_palette
from .pngio import decode_label_map, normalize_saliency
from .pipeline import run_pipeline
from .srg import (
    grow_regions,
    grow_regions_oracle,
    growing_predicate,
    pixel_similarity,
    reachable_set,
)
from .types import (
    BACKGROUND,
    IGNORE,
    ActivationStack,
    Cam,
    ClassWeights,
    GrowConfig,
    HsvImage,
    ImageLabels,
    LabelMap,
    SaliencyMap,
)

__version__ = "0.1.0"
