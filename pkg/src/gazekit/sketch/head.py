"""Canonical 3-D landmark head and the weak-perspective camera.

The asset is a fixed, mirror-symmetric set of landmark groups in a
canonical frame (+x subject-left, +y up, +z toward the camera), plus two
eyeballs. Units are arbitrary; the default camera maps them to a 256x256
canvas. Coordinates are hand-placed to read as a plausible face sketch
while keeping the geometry exactly symmetric about x = 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from ..errors import ConfigError

GROUP_SIZES = {
    "contour": 17,
    "brow_right": 5,
    "brow_left": 5,
    "nose": 9,
    "mouth": 20,
    "eyelid_right": 6,
    "eyelid_left": 6,
}

# open polylines vs closed loops when stroking the sketch
CLOSED_GROUPS = ("mouth", "eyelid_right", "eyelid_left")
MIRROR_PAIRS = (("brow_left", "brow_right"), ("eyelid_left", "eyelid_right"))
SELF_MIRRORED = ("contour", "nose", "mouth")


@dataclass(frozen=True)
class CameraSpec:
    """Weak-perspective projection: u = cx + s*x, v = cy - s*y."""

    scale: float = 100.0
    cx: float = 127.5
    cy: float = 127.5
    width: int = 256
    height: int = 256

    def validate(self):
        if self.scale <= 0:
            raise ConfigError("camera scale must be positive")
        if not (0 <= self.cx < self.width and 0 <= self.cy < self.height):
            raise ConfigError("principal point outside the image")

    def project(self, points):
        points = np.asarray(points, dtype=np.float64)
        u = self.cx + self.scale * points[..., 0]
        v = self.cy - self.scale * points[..., 1]
        return np.stack([u, v], axis=-1)


@dataclass(frozen=True)
class CanonicalHead:
    groups: dict = field(default_factory=dict)  # name -> (N, 3) float64
    eye_centers: tuple = ()  # ((left xyz), (right xyz))
    eyeball_radius: float = 0.115
    iris_deg: float = 24.0
    pupil_deg: float = 10.0

    def validate(self):
        for name, size in GROUP_SIZES.items():
            pts = self.groups.get(name)
            if pts is None or pts.shape != (size, 3):
                raise ConfigError(f"group {name!r} must have shape ({size}, 3)")
        if len(self.eye_centers) != 2:
            raise ConfigError("need exactly two eyeball centers")
        if not 0 < self.pupil_deg < self.iris_deg < 90:
            raise ConfigError("need 0 < pupil_deg < iris_deg < 90")
        if self.eyeball_radius <= 0:
            raise ConfigError("eyeball radius must be positive")

    def all_points(self):
        return np.concatenate(list(self.groups.values()), axis=0)

    def to_json(self) -> str:
        payload = {
            "groups": {k: v.tolist() for k, v in self.groups.items()},
            "eye_centers": [list(c) for c in self.eye_centers],
            "eyeball_radius": self.eyeball_radius,
            "iris_deg": self.iris_deg,
            "pupil_deg": self.pupil_deg,
        }
        return json.dumps(payload, indent=1)


def head_from_json(text: str) -> CanonicalHead:
    obj = json.loads(text)
    head = CanonicalHead(
        groups={k: np.asarray(v, dtype=np.float64) for k, v in obj["groups"].items()},
        eye_centers=tuple(tuple(c) for c in obj["eye_centers"]),
        eyeball_radius=float(obj["eyeball_radius"]),
        iris_deg=float(obj["iris_deg"]),
        pupil_deg=float(obj["pupil_deg"]),
    )
    head.validate()
    return head


def load_head(path=None) -> CanonicalHead:
    if path is None:
        return default_head()
    with open(path, encoding="utf-8") as fh:
        return head_from_json(fh.read())


def _mirror_x(points):
    return np.asarray(points, dtype=np.float64) * np.array([-1.0, 1.0, 1.0])


def default_head() -> CanonicalHead:
    """The embedded canonical head asset."""
    # jaw from the subject's right ear to the chin; mirrored for the left
    jaw_right = np.array(
        [
            [-0.92, 0.30, 0.10],
            [-0.90, 0.05, 0.12],
            [-0.85, -0.20, 0.14],
            [-0.76, -0.42, 0.16],
            [-0.62, -0.62, 0.18],
            [-0.44, -0.80, 0.20],
            [-0.24, -0.94, 0.21],
            [-0.10, -1.02, 0.22],
        ]
    )
    chin = np.array([[0.0, -1.05, 0.23]])
    contour = np.concatenate([jaw_right, chin, _mirror_x(jaw_right)[::-1]], axis=0)

    brow_right = np.array(
        [
            [-0.72, 0.46, 0.24],
            [-0.56, 0.52, 0.28],
            [-0.40, 0.54, 0.30],
            [-0.24, 0.52, 0.31],
            [-0.10, 0.47, 0.31],
        ]
    )
    brow_left = _mirror_x(brow_right)

# palindromic path (left wall down, tip, right wall up) so the open
    # polyline strokes the same pixel set as its mirror image
    nose_left = np.array(
        [
            [-0.05, 0.36, 0.33],
            [-0.08, 0.16, 0.36],
            [-0.12, -0.04, 0.36],
            [-0.18, -0.16, 0.32],
        ]
    )
    nose_tip = np.array([[0.0, -0.22, 0.42]])
    nose = np.concatenate([nose_left, nose_tip, _mirror_x(nose_left)[::-1]], axis=0)

    ang = 2.0 * np.pi * np.arange(20) / 20.0
    mouth = np.stack(
        [0.30 * np.cos(ang), -0.60 + 0.11 * np.sin(ang), np.full(20, 0.28)], axis=-1
    )

    lid_w, lid_h = 0.155, 0.055
    lid_rel = np.array(
        [
            [-lid_w, 0.0, 0.0],
            [-lid_w / 3.0, lid_h, 0.0],
            [lid_w / 3.0, lid_h, 0.0],
            [lid_w, 0.0, 0.0],
            [lid_w / 3.0, -lid_h, 0.0],
            [-lid_w / 3.0, -lid_h, 0.0],
        ]
    )
    eye_left = np.array([0.34, 0.12, 0.18])
    eye_right = _mirror_x(eye_left)
    lid_z = np.array([0.0, 0.0, 0.12])
    eyelid_left = lid_rel + eye_left + lid_z
    eyelid_right = _mirror_x(eyelid_left)

    head = CanonicalHead(
        groups={
            "contour": contour,
            "brow_right": brow_right,
            "brow_left": brow_left,
            "nose": nose,
            "mouth": mouth,
            "eyelid_right": eyelid_right,
            "eyelid_left": eyelid_left,
        },
        eye_centers=(tuple(eye_left), tuple(eye_right)),
    )
    head.validate()
    return head
