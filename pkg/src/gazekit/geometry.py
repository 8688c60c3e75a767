"""Yaw/pitch angle conversions, head+eye rotation composition, angular errors.

Frame convention: +z points straight ahead (toward the camera), +x is the
subject's left, +y is up. Positive yaw turns toward the subject's left,
positive pitch turns up. Angles are degrees throughout; all math runs at
float64 precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError, InvalidVectorError

EULER_ORDERS = ("pitch-then-yaw", "yaw-then-pitch")
FRAMES = ("extrinsic", "intrinsic")

UNIT_TOL = 1e-6


@dataclass(frozen=True)
class Convention:
    """Choice of elementary-rotation order and frame for yaw/pitch rotations."""

    euler_order: str
    frame: str

    def __post_init__(self):
        if self.euler_order not in EULER_ORDERS:
            raise ConfigError(f"unknown euler_order {self.euler_order!r}")
        if self.frame not in FRAMES:
            raise ConfigError(f"unknown frame {self.frame!r}")

    @property
    def name(self) -> str:
        return f"{self.euler_order}/{self.frame}"

    @staticmethod
    def candidates() -> "list[Convention]":
        """All four candidates, in (euler_order, frame) lexicographic order."""
        return [Convention(o, f) for o in EULER_ORDERS for f in FRAMES]

    @staticmethod
    def parse(name: str) -> "Convention":
        order, _, frame = name.partition("/")
        return Convention(order, frame)


def normalize_yawpitch(yp):
    """Map (yaw, pitch) pairs onto the canonical range.

    Pitch is folded into [-90, 90] (a pitch past vertical flips over the
    top), yaw is wrapped into (-180, 180]. At pitch exactly +/-90 yaw is
    forced to 0 (gimbal tie-break).
    """
    yp = np.asarray(yp, dtype=np.float64)
    if not np.all(np.isfinite(yp)):
        raise InvalidVectorError("non-finite yaw/pitch")
    yaw = yp[..., 0].copy()
    pitch = yp[..., 1].copy()
    # fold pitch into [-180, 180) first, then reflect the over-the-top half
    pitch = (pitch + 180.0) % 360.0 - 180.0
    over = np.abs(pitch) > 90.0
    pitch = np.where(over, np.sign(pitch) * 180.0 - pitch, pitch)
    yaw = np.where(over, yaw + 180.0, yaw)
    yaw = -((-yaw + 180.0) % 360.0 - 180.0)  # wrap into (-180, 180]
    yaw = np.where(np.abs(pitch) == 90.0, 0.0, yaw)
    return np.stack([yaw, pitch], axis=-1)


def yawpitch_to_vec(yp):
    """Convert (..., 2) yaw/pitch degrees to (..., 3) unit direction vectors.

    v = (cos(pitch)*sin(yaw), sin(pitch), cos(pitch)*cos(yaw)).
    """
    yp = normalize_yawpitch(yp)
    yaw = np.radians(yp[..., 0])
    pitch = np.radians(yp[..., 1])
    cp = np.cos(pitch)
    return np.stack([cp * np.sin(yaw), np.sin(pitch), cp * np.cos(yaw)], axis=-1)


def vec_to_yawpitch(v):
    """Convert (..., 3) unit vectors to (..., 2) yaw/pitch degrees.

    yaw = atan2(x, z), pitch = asin(clamp(y, -1, 1)).
    """
    v = np.asarray(v, dtype=np.float64)
    norm = np.linalg.norm(v, axis=-1)
    if np.any(np.abs(norm - 1.0) > UNIT_TOL):
        worst = float(np.max(np.abs(norm - 1.0)))
        raise InvalidVectorError(f"vector norm off unit by {worst:.3g}")
    yaw = np.degrees(np.arctan2(v[..., 0], v[..., 2]))
    pitch = np.degrees(np.arcsin(np.clip(v[..., 1], -1.0, 1.0)))
    return np.stack([yaw, pitch], axis=-1)


def _yaw_matrix(yaw_deg):
    y = np.radians(np.asarray(yaw_deg, dtype=np.float64))
    c, s = np.cos(y), np.sin(y)
    zero = np.zeros_like(c)
    one = np.ones_like(c)
    return np.stack(
        [
            np.stack([c, zero, s], axis=-1),
            np.stack([zero, one, zero], axis=-1),
            np.stack([-s, zero, c], axis=-1),
        ],
        axis=-2,
    )


def _pitch_matrix(pitch_deg):
    # Rotation about x chosen so positive pitch lifts +z toward +y.
    p = np.radians(np.asarray(pitch_deg, dtype=np.float64))
    c, s = np.cos(p), np.sin(p)
    zero = np.zeros_like(c)
    one = np.ones_like(c)
    return np.stack(
        [
            np.stack([one, zero, zero], axis=-1),
            np.stack([zero, c, s], axis=-1),
            np.stack([zero, -s, c], axis=-1),
        ],
        axis=-2,
    )


def rotation_matrix(yp, conv: Convention):
    """Rotation matrix for a (yaw, pitch) pose under the given convention."""
    yp = np.asarray(yp, dtype=np.float64)
    ry = _yaw_matrix(yp[..., 0])
    rp = _pitch_matrix(yp[..., 1])
    if conv.euler_order == "yaw-then-pitch":
        first, second = ry, rp
    else:
        first, second = rp, ry
    if conv.frame == "intrinsic":
        return first @ second
    return second @ first


def compose_gaze(head, eye, conv: Convention):
    """Apply the head rotation to the in-head eye direction.

    Returns the composed gaze as (yaw, pitch) degrees. An identity head
    returns the eye pose exactly, and a centered eye returns the head pose
    exactly (both shortcuts are bit-exact versions of the general formula).
    """
    head = normalize_yawpitch(head)
    eye = normalize_yawpitch(eye)
    head_b, eye_b = np.broadcast_arrays(head, eye)
    rot = rotation_matrix(head_b, conv)
    vec = yawpitch_to_vec(eye_b)
    gaze = vec_to_yawpitch((rot @ vec[..., None])[..., 0])
    head_zero = np.all(head_b == 0.0, axis=-1, keepdims=True)
    eye_zero = np.all(eye_b == 0.0, axis=-1, keepdims=True)
    gaze = np.where(head_zero, eye_b, gaze)
    gaze = np.where(eye_zero & ~head_zero, head_b, gaze)
    return gaze


def decompose_gaze(gaze, head, conv: Convention):
    """Recover the in-head eye pose from a composed gaze and a head pose."""
    head = normalize_yawpitch(head)
    gaze = normalize_yawpitch(gaze)
    head_b, gaze_b = np.broadcast_arrays(head, gaze)
    rot = rotation_matrix(head_b, conv)
    vec = yawpitch_to_vec(gaze_b)
    inv = np.swapaxes(rot, -1, -2)
    return vec_to_yawpitch((inv @ vec[..., None])[..., 0])


def angular_error_deg(a, b):
    """Geodesic angle in degrees between the directions of two poses.

    Evaluates arccos of the cosine similarity via atan2(|cross|, dot),
    which is exact at 0 and well-conditioned near both ends.
    """
    va = yawpitch_to_vec(a)
    vb = yawpitch_to_vec(b)
    dot = np.sum(va * vb, axis=-1)
    cross = np.linalg.norm(np.cross(va, vb), axis=-1)
    return np.degrees(np.arctan2(cross, dot))
