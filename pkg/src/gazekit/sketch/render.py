"""Pose the canonical head and rasterize the conditioning sketch.

Sketch palette: 0 background, 64 pupil, 128 eye region (incl. iris),
255 contour strokes. Iris and pupil disks are clipped to the filled
eyelid polygons so occluded portions never appear.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import OutOfFrameError
from ..geometry import Convention, rotation_matrix, yawpitch_to_vec
from .head import CLOSED_GROUPS, CameraSpec, CanonicalHead
from .raster import draw_polyline, polygon_mask

VALUE_BACKGROUND = 0
VALUE_PUPIL = 64
VALUE_EYE_REGION = 128
VALUE_CONTOUR = 255

PALETTE = (VALUE_BACKGROUND, VALUE_PUPIL, VALUE_EYE_REGION, VALUE_CONTOUR)

_DISK_SEGMENTS = 24


@dataclass
class PosedHead:
    """Head-rotated landmark groups plus per-eye iris/pupil geometry."""

    groups: dict  # name -> (N, 3) rotated points
    eye_centers: np.ndarray  # (2, 3)
    iris_centers: np.ndarray  # (2, 3) on the eyeball surface
    iris_rings: list  # two (24, 3) boundary loops
    pupil_rings: list  # two (24, 3) boundary loops


def _ring_on_sphere(center, radius, direction, angular_radius_deg):
    """Circle of points on the eyeball sphere around a surface direction."""
    d = direction / np.linalg.norm(direction)
    up = np.array([0.0, 1.0, 0.0])
    u = np.cross(up, d)
    norm = np.linalg.norm(u)
    if norm < 1e-9:  # gaze straight up/down: fall back to the z axis
        u = np.cross(d, np.array([0.0, 0.0, 1.0]))
        norm = np.linalg.norm(u)
    u /= norm
    v = np.cross(d, u)
    alpha = np.radians(angular_radius_deg)
    theta = 2.0 * np.pi * np.arange(_DISK_SEGMENTS) / _DISK_SEGMENTS
    ring = (
        np.cos(alpha) * d[None, :]
        + np.sin(alpha) * (np.cos(theta)[:, None] * u[None, :] + np.sin(theta)[:, None] * v[None, :])
    )
    return center[None, :] + radius * ring


def pose_canonical_head(head_pose, eye_pose, conv: Convention, asset: CanonicalHead) -> PosedHead:
    """Rotate all head-fixed geometry and place the irises on the eyeballs.

    The iris center sits on the eyeball surface along the composed gaze
    direction (head rotation applied to the in-head eye direction); the
    pupil is concentric at a smaller angular radius.
    """
    asset.validate()
    rot = rotation_matrix(np.asarray(head_pose, dtype=np.float64), conv)
    groups = {name: pts @ rot.T for name, pts in asset.groups.items()}
    centers = np.asarray(asset.eye_centers, dtype=np.float64) @ rot.T
    gaze_dir = rot @ yawpitch_to_vec(eye_pose)
    iris_centers = centers + asset.eyeball_radius * gaze_dir[None, :]
    iris_rings = []
    pupil_rings = []
    for center in centers:
        iris_rings.append(_ring_on_sphere(center, asset.eyeball_radius, gaze_dir, asset.iris_deg))
        pupil_rings.append(_ring_on_sphere(center, asset.eyeball_radius, gaze_dir, asset.pupil_deg))
    return PosedHead(
        groups=groups,
        eye_centers=centers,
        iris_centers=iris_centers,
        iris_rings=iris_rings,
        pupil_rings=pupil_rings,
    )


@dataclass
class SketchLayers:
    """Composed sketch plus the masks and measurements tests rely on."""

    image: np.ndarray
    eye_region: np.ndarray
    iris_visible: np.ndarray
    pupil_visible: np.ndarray
    iris_centers_px: np.ndarray  # (2, 2) projected geometric centers
    iris_centroid_px: tuple | None  # centroid of visible iris pixels


def _check_in_frame(points_px, camera: CameraSpec):
    u = points_px[..., 0]
    v = points_px[..., 1]
    if (
        np.min(u) < 0
        or np.max(u) > camera.width - 1
        or np.min(v) < 0
        or np.max(v) > camera.height - 1
    ):
        raise OutOfFrameError(
            f"projected sketch spans [{np.min(u):.1f}, {np.max(u):.1f}] x "
            f"[{np.min(v):.1f}, {np.max(v):.1f}] outside {camera.width}x{camera.height}"
        )


def render_layers(head_pose, eye_pose, conv, asset, camera: CameraSpec | None = None) -> SketchLayers:
    camera = camera if camera is not None else CameraSpec()
    camera.validate()
    posed = pose_canonical_head(head_pose, eye_pose, conv, asset)
    shape = (camera.height, camera.width)

    group_px = {name: camera.project(pts) for name, pts in posed.groups.items()}
    _check_in_frame(np.concatenate(list(group_px.values()), axis=0), camera)

    eye_region = polygon_mask(shape, group_px["eyelid_left"]) | polygon_mask(
        shape, group_px["eyelid_right"]
    )
    iris = np.zeros(shape, dtype=bool)
    pupil = np.zeros(shape, dtype=bool)
    for ring in posed.iris_rings:
        iris |= polygon_mask(shape, camera.project(ring))
    for ring in posed.pupil_rings:
        pupil |= polygon_mask(shape, camera.project(ring))
    iris &= eye_region  # eyelid occlusion
    pupil &= eye_region

    img = np.zeros(shape, dtype=np.uint8)
    img[eye_region] = VALUE_EYE_REGION
    img[iris] = VALUE_EYE_REGION
    img[pupil] = VALUE_PUPIL
    for name, pts in group_px.items():
        draw_polyline(img, pts, VALUE_CONTOUR, closed=name in CLOSED_GROUPS)

    ys, xs = np.nonzero(iris)
    centroid = (float(xs.mean()), float(ys.mean())) if len(xs) else None
    return SketchLayers(
        image=img,
        eye_region=eye_region,
        iris_visible=iris,
        pupil_visible=pupil,
        iris_centers_px=camera.project(posed.iris_centers),
        iris_centroid_px=centroid,
    )


def render_sketch(head_pose, eye_pose, conv, asset, camera: CameraSpec | None = None) -> np.ndarray:
    """256x256 single-channel sketch (palette 0/64/128/255)."""
    return render_layers(head_pose, eye_pose, conv, asset, camera).image
