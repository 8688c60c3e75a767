"""Direction bands used by the offline description templates and the parser.

Thresholds are centralized here so the template generator and the
direction parser can never drift apart: center < 5, slight 5-25,
mid 25-60, extreme > 60 (absolute degrees).
"""

from __future__ import annotations

CENTER_MAX = 5.0
SLIGHT_MAX = 25.0
MID_MAX = 60.0

AXES = ("head-yaw", "head-pitch", "gaze-yaw", "gaze-pitch")

BANDS = (
    "extreme-neg",
    "mid-neg",
    "slight-neg",
    "center",
    "slight-pos",
    "mid-pos",
    "extreme-pos",
)


def bucketize(value_deg: float) -> str:
    """Map a signed angle in degrees to its direction band."""
    mag = abs(value_deg)
    if mag < CENTER_MAX:
        return "center"
    if mag < SLIGHT_MAX:
        grade = "slight"
    elif mag <= MID_MAX:
        grade = "mid"
    else:
        grade = "extreme"
    return f"{grade}-{'pos' if value_deg > 0 else 'neg'}"


def band_sign(band: str) -> int:
    if band == "center":
        return 0
    return 1 if band.endswith("-pos") else -1


def band_grade(band: str) -> str:
    return "center" if band == "center" else band.rsplit("-", 1)[0]
