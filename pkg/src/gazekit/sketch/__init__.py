"""Gaze-conditioned face sketch rendering."""

from .head import CameraSpec, CanonicalHead, default_head, head_from_json, load_head
from .imgio import decode_image, encode_image, pgm_bytes, png_bytes, read_pgm_bytes, read_png_bytes
from .raster import dilate1, masks_match_within_1px, polygon_mask
from .render import (
    PALETTE,
    VALUE_BACKGROUND,
    VALUE_CONTOUR,
    VALUE_EYE_REGION,
    VALUE_PUPIL,
    PosedHead,
    SketchLayers,
    pose_canonical_head,
    render_layers,
    render_sketch,
)

__all__ = [
    "CameraSpec",
    "CanonicalHead",
    "PALETTE",
    "PosedHead",
    "SketchLayers",
    "VALUE_BACKGROUND",
    "VALUE_CONTOUR",
    "VALUE_EYE_REGION",
    "VALUE_PUPIL",
    "decode_image",
    "default_head",
    "dilate1",
    "encode_image",
    "head_from_json",
    "load_head",
    "masks_match_within_1px",
    "pgm_bytes",
    "png_bytes",
    "polygon_mask",
    "pose_canonical_head",
    "read_pgm_bytes",
    "read_png_bytes",
    "render_layers",
    "render_sketch",
]
