"""Keyword parser and validity checker for gaze/head descriptions."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..errors import UnparseableTextError
from .buckets import AXES
from .prompts import DEFAULT_SUBJECT

_HEAD_WORDS = {"head", "heads"}
_GAZE_WORDS = {
    "gaze", "gazes", "gazed", "gazing",
    "look", "looks", "looked", "looking",
    "stare", "stares", "stared", "staring",
}

_YAW_POS = {"left", "leftward", "leftwards"}
_YAW_NEG = {"right", "rightward", "rightwards"}
_PITCH_POS = {"up", "upward", "upwards", "upwardly", "rising", "raised", "skyward"}
_PITCH_NEG = {"down", "downward", "downwards", "downwardly", "descending", "dipped", "lowered"}

_CENTER_WORDS = {
    "straight", "ahead", "still", "level", "center", "centered",
    "straightforward", "forward",
}

_EXTENT = {}
for word in ("slightly", "gently", "mildly", "barely", "faintly", "minimally"):
    _EXTENT[word] = "slight"
for word in ("clearly", "moderately", "noticeably", "somewhat", "visibly"):
    _EXTENT[word] = "mid"
for word in (
    "sharply", "significantly", "steeply", "deeply", "strongly", "far",
    "extremely", "dramatically", "heavily", "intensely", "keenly",
):
    _EXTENT[word] = "extreme"

_NUMERIC_ANGLE = re.compile(r"\d[\d.]*\s*(?:°|degrees?\b)", re.IGNORECASE)
_HEAD_MENTION = re.compile(r"\bheads?\b", re.IGNORECASE)
_GAZE_MENTION = re.compile(r"\bgaz(?:e|es|ed|ing)\b", re.IGNORECASE)


@dataclass
class ParsedDirections:
    """Direction bands recovered from a description.

    ``confidence`` is "high" for axes the text mentions and "low" for
    axes defaulted to center.
    """

    bands: dict
    confidence: dict
    notes: list = field(default_factory=list)


def _band(grade: str | None, sign: int) -> str:
    if sign == 0:
        return "center"
    return f"{grade or 'mid'}-{'pos' if sign > 0 else 'neg'}"


def parse_directions(text: str) -> ParsedDirections:
    """Scan a sentence for direction keywords attributed to head or gaze.

    Unmentioned axes come back as center with low confidence. A text
    without any direction or center keyword is unparseable.
    """
    tokens = re.findall(r"[a-z]+", text.lower())
    bands = {axis: None for axis in AXES}
    subject = None
    pending_extent = None
    matched_any = False
    notes = []

    def set_axis(axis_kind: str, sign: int, grade):
        nonlocal matched_any
        if subject is None:
            notes.append(f"direction word before any subject: sign {sign}")
            return
        axis = f"{subject}-{axis_kind}"
        bands[axis] = _band(grade, sign)
        matched_any = True

    for tok in tokens:
        if tok in _HEAD_WORDS:
            subject = "head"
            pending_extent = None
        elif tok in _GAZE_WORDS:
            subject = "gaze"
            pending_extent = None
        elif tok in _EXTENT:
            pending_extent = _EXTENT[tok]
        elif tok in _YAW_POS or tok in _YAW_NEG:
            set_axis("yaw", 1 if tok in _YAW_POS else -1, pending_extent)
            pending_extent = None
        elif tok in _PITCH_POS or tok in _PITCH_NEG:
            set_axis("pitch", 1 if tok in _PITCH_POS else -1, pending_extent)
            pending_extent = None
        elif tok in _CENTER_WORDS and subject is not None:
            for kind in ("yaw", "pitch"):
                axis = f"{subject}-{kind}"
                if bands[axis] is None:
                    bands[axis] = "center"
            matched_any = True

    if not matched_any:
        raise UnparseableTextError(f"no direction keywords found in {text!r}")

    confidence = {}
    for axis in AXES:
        if bands[axis] is None:
            bands[axis] = "center"
            confidence[axis] = "low"
        else:
            confidence[axis] = "high"
    return ParsedDirections(bands=bands, confidence=confidence, notes=notes)


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, rule: str, message: str):
        self.violations.append((rule, message))


def validate_description(text: str, precision: str, subject: str = DEFAULT_SUBJECT) -> ValidationReport:
    """Check a description against the prompt's constraints.

    Rules: subject prefix, single sentence, word budget for the precision
    level, no numeric angle values, and explicit head and gaze mentions.
    """
    report = ValidationReport()
    stripped = text.strip()
    if not stripped.startswith(subject):
        report.add("subject-prefix", f"must begin with {subject!r}")
    body = stripped[:-1] if stripped.endswith((".", "!", "?")) else stripped
    if any(ch in body for ch in ".!?"):
        report.add("single-sentence", "interior sentence terminator")
    words = len(stripped.split())
    if precision == "low":
        if words > 10:
            report.add("word-count", f"{words} words exceeds the 10-word limit")
    else:
        if not 20 <= words <= 30:
            report.add("word-count", f"{words} words outside [20, 30]")
    if _NUMERIC_ANGLE.search(stripped):
        report.add("numeric-angle", "contains a numeric angle value")
    if not _HEAD_MENTION.search(stripped):
        report.add("mentions-head", "no mention of the head")
    if not _GAZE_MENTION.search(stripped):
        report.add("mentions-gaze", "no mention of the gaze")
    return report
