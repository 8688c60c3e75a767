"""Prompt construction, offline templates, and description parsing."""

from .buckets import AXES, BANDS, bucketize, band_grade, band_sign
from .prompts import (
    DEFAULT_SUBJECT,
    PromptSpec,
    SubstitutionResult,
    build_prompt,
    substitute_subject,
    values_line,
)
from .records import PRECISIONS, SOURCES, TextRecord
from .templates import (
    load_phrase_tables,
    parse_phrase_tables,
    template_annotate,
    template_records,
)
from .textparse import (
    ParsedDirections,
    ValidationReport,
    parse_directions,
    validate_description,
)

__all__ = [
    "AXES",
    "BANDS",
    "DEFAULT_SUBJECT",
    "PRECISIONS",
    "SOURCES",
    "ParsedDirections",
    "PromptSpec",
    "SubstitutionResult",
    "TextRecord",
    "ValidationReport",
    "band_grade",
    "band_sign",
    "bucketize",
    "build_prompt",
    "load_phrase_tables",
    "parse_phrase_tables",
    "parse_directions",
    "substitute_subject",
    "template_annotate",
    "template_records",
    "validate_description",
    "values_line",
]
