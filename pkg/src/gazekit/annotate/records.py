"""The annotation record: one pose triple plus one description."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DatasetError

PRECISIONS = ("low", "high")
SOURCES = ("llm", "template")


@dataclass(frozen=True)
class TextRecord:
    sample_id: int
    head: tuple
    eye: tuple
    gaze: tuple
    precision: str
    text: str
    source: str
    variant_index: int

    def key(self):
        return (self.sample_id, self.precision, self.variant_index, self.source)

    def validate(self):
        if self.precision not in PRECISIONS:
            raise DatasetError(f"bad precision {self.precision!r}")
        if self.source not in SOURCES:
            raise DatasetError(f"bad source {self.source!r}")
        if not self.text:
            raise DatasetError("empty text")
        if self.variant_index < 0:
            raise DatasetError("negative variant_index")
        for name, pair in (("head", self.head), ("eye", self.eye), ("gaze", self.gaze)):
            if len(pair) != 2:
                raise DatasetError(f"{name} is not a (yaw, pitch) pair")
