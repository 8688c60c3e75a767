"""Line-delimited dataset files: write, read, split, summarize, validate.

Files carry one JSON header line (format version, generator) followed by
one record per line with a fixed key order and fixed number formatting,
so regenerating the same records yields byte-identical files.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .annotate.records import TextRecord
from .annotate.textparse import validate_description
from .errors import ConfigError, DatasetError, DatasetFormatError
from .geometry import Convention, angular_error_deg, compose_gaze
from .util import format_angle

FORMAT_VERSION = 1
GENERATOR = "gazekit"

GAZE_RECOMPUTE_TOL_DEG = 0.01


@dataclass(frozen=True)
class SplitSpec:
    """Train/test split at pose-sample granularity."""

    train_ratio: float = 0.9
    seed: int = 0

    def validate(self):
        if not 0.0 < self.train_ratio < 1.0:
            raise ConfigError("train_ratio must lie strictly between 0 and 1")


def _pair(p) -> str:
    return f"[{format_angle(p[0])},{format_angle(p[1])}]"


def record_to_line(record: TextRecord) -> str:
    return (
        f'{{"id":{record.sample_id}'
        f',"head":{_pair(record.head)}'
        f',"eye":{_pair(record.eye)}'
        f',"gaze":{_pair(record.gaze)}'
        f',"precision":{json.dumps(record.precision)}'
        f',"text":{json.dumps(record.text, ensure_ascii=False)}'
        f',"source":{json.dumps(record.source)}'
        f',"variant":{record.variant_index}}}'
    )


def line_to_record(line: str) -> TextRecord:
    obj = json.loads(line)
    return TextRecord(
        sample_id=int(obj["id"]),
        head=tuple(float(v) for v in obj["head"]),
        eye=tuple(float(v) for v in obj["eye"]),
        gaze=tuple(float(v) for v in obj["gaze"]),
        precision=obj["precision"],
        text=obj["text"],
        source=obj["source"],
        variant_index=int(obj["variant"]),
    )


def header_line() -> str:
    return json.dumps({"format_version": FORMAT_VERSION, "generator": GENERATOR})


def write_records(records, path) -> int:
    """Write records to a dataset file; returns the number written.

    Every record is validated (including key uniqueness) before any byte
    is written, so a failure never leaves a partial file behind.
    """
    records = list(records)
    seen = set()
    for i, record in enumerate(records):
        try:
            record.validate()
        except DatasetError as exc:
            raise DatasetError(f"record {i} (id {record.sample_id}): {exc}") from exc
        key = record.key()
        if key in seen:
            raise DatasetError(f"record {i}: duplicate key {key}")
        seen.add(key)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(header_line() + "\n")
        for record in records:
            fh.write(record_to_line(record) + "\n")
    return len(records)


def read_records(path):
    """Strictly parse a dataset file; returns (records, diagnostics).

    Malformed record lines are reported with their line number rather
    than aborting the read. A bad header or version is fatal.
    """
    records = []
    diagnostics = []
    with open(path, encoding="utf-8") as fh:
        header = fh.readline()
        try:
            meta = json.loads(header)
            version = meta["format_version"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise DatasetFormatError(f"bad header line: {exc}") from exc
        if version != FORMAT_VERSION:
            raise DatasetFormatError(
                f"format_version {version} unsupported (expected {FORMAT_VERSION})"
            )
        for lineno, line in enumerate(fh, start=2):
            line = line.strip()
            if not line:
                continue
            try:
                record = line_to_record(line)
                record.validate()
                records.append(record)
            except (json.JSONDecodeError, DatasetError, KeyError, ValueError, TypeError) as exc:
                diagnostics.append(f"line {lineno}: {exc}")
    return records, diagnostics


def split_dataset(records, spec: SplitSpec):
    """Partition records into train/test by pose-sample id.

    All descriptions of one pose land on the same side; the id
    permutation is drawn from the seeded generator, and the train side
    receives floor(ratio * #ids) ids.
    """
    spec.validate()
    records = list(records)
    if not records:
        raise ConfigError("cannot split an empty record list")
    ids = sorted({r.sample_id for r in records})
    rng = np.random.default_rng(spec.seed)
    perm = rng.permutation(len(ids))
    n_train = int(np.floor(spec.train_ratio * len(ids)))
    train_ids = {ids[i] for i in perm[:n_train]}
    train = [r for r in records if r.sample_id in train_ids]
    test = [r for r in records if r.sample_id not in train_ids]
    return train, test


@dataclass
class DatasetStats:
    total: int = 0
    by_precision: dict = field(default_factory=dict)
    by_source: dict = field(default_factory=dict)
    distinct_samples: int = 0
    gaze_yaw_hist: dict = field(default_factory=dict)
    gaze_pitch_hist: dict = field(default_factory=dict)
    duplicate_keys: list = field(default_factory=list)

    def to_text(self) -> str:
        lines = [f"total = {self.total}", f"distinct_samples = {self.distinct_samples}"]
        for name, counter in (("precision", self.by_precision), ("source", self.by_source)):
            for key in sorted(counter):
                lines.append(f"{name}.{key} = {counter[key]}")
        for name, hist in (("gaze_yaw", self.gaze_yaw_hist), ("gaze_pitch", self.gaze_pitch_hist)):
            for bucket in sorted(hist):
                lines.append(f"hist.{name}.{bucket} = {hist[bucket]}")
        lines.append(f"duplicate_keys = {len(self.duplicate_keys)}")
        return "\n".join(lines)


def _bucket10(value: float) -> int:
    return int(np.floor(value / 10.0) * 10)


def dataset_stats(records) -> DatasetStats:
    """Counts, 10-degree pose-coverage histograms, duplicate detection."""
    stats = DatasetStats()
    seen = {}
    precision = Counter()
    source = Counter()
    yaw_hist = Counter()
    pitch_hist = Counter()
    sample_ids = set()
    for record in records:
        stats.total += 1
        precision[record.precision] += 1
        source[record.source] += 1
        sample_ids.add(record.sample_id)
        yaw_hist[_bucket10(record.gaze[0])] += 1
        pitch_hist[_bucket10(record.gaze[1])] += 1
        key = record.key()
        if key in seen:
            stats.duplicate_keys.append(key)
        seen[key] = True
    stats.by_precision = dict(precision)
    stats.by_source = dict(source)
    stats.gaze_yaw_hist = dict(yaw_hist)
    stats.gaze_pitch_hist = dict(pitch_hist)
    stats.distinct_samples = len(sample_ids)
    return stats


def validate_records(records, conv: Convention):
    """Cross-check stored gazes against recomposition and re-run the
    description validator; returns a list of (index, rule, message) flags."""
    flags = []
    for i, record in enumerate(records):
        recomputed = compose_gaze(record.head, record.eye, conv)
        err = float(angular_error_deg(recomputed, record.gaze))
        if err > GAZE_RECOMPUTE_TOL_DEG:
            flags.append((i, "gaze-mismatch", f"stored gaze off by {err:.4f} deg"))
        report = validate_description(record.text, record.precision)
        for rule, message in report.violations:
            flags.append((i, rule, message))
    return flags
