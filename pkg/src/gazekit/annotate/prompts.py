"""Chat prompts for LLM annotation and subject substitution."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ..errors import ConfigError
from ..util import format_angle
from .records import PRECISIONS

DEFAULT_SUBJECT = "The person"

_PROMPT_HEADER = (
    "Imagine describing someone's head and gaze movement. Given four numbers "
    "representing yaw and pitch for both head and gaze (positive for left/up, "
    "negative for right/down), craft a detailed description. Your narrative should:"
)

_REQUIREMENTS_LOW = (
    "1. Avoid numerical values for angles;",
    "2. Offer rough direction descriptions regardless of extent;",
    "3. Be one sentence and within 10 words;",
    "4. Begin with 'The person' and describe 'the head' and 'the gaze' impersonally.",
)

_REQUIREMENTS_HIGH = (
    "1. Avoid numerical values for angles;",
    "2. Offer precise direction descriptions with a clear extent;",
    "3. Be concise, between 20 and 30 words;",
    "4. Begin with 'The person' and describe 'the head' and 'the gaze' impersonally.",
)

_MULTI_VARIANTS = "Please give me {n} different descriptions."


@dataclass(frozen=True)
class PromptSpec:
    precision: str = "low"
    n_variants: int | None = None  # defaults to 1 for low, 3 for high
    subject: str = DEFAULT_SUBJECT

    def resolved_variants(self) -> int:
        if self.n_variants is not None:
            if self.n_variants < 1:
                raise ConfigError("n_variants must be >= 1")
            return self.n_variants
        return 1 if self.precision == "low" else 3

    def validate(self):
        if self.precision not in PRECISIONS:
            raise ConfigError(f"precision must be one of {PRECISIONS}")
        self.resolved_variants()
        if not self.subject.strip():
            raise ConfigError("subject must be non-empty")


def values_line(head, gaze) -> str:
    return (
        f"Head yaw: {format_angle(head[0])}. Head pitch: {format_angle(head[1])}. "
        f"Gaze yaw: {format_angle(gaze[0])}. Gaze pitch: {format_angle(gaze[1])}."
    )


def build_prompt(sample, spec: PromptSpec) -> str:
    """Assemble the annotation prompt for one pose sample.

    The requirement block is fixed wording; the trailing values line is
    this toolkit's convention for passing the numbers. When more than one
    description is requested the multiplicity sentence closes the prompt.
    """
    spec.validate()
    reqs = _REQUIREMENTS_LOW if spec.precision == "low" else _REQUIREMENTS_HIGH
    parts = [_PROMPT_HEADER, *reqs, "", values_line(sample.head, sample.gaze)]
    n = spec.resolved_variants()
    if n > 1:
        word = "three" if n == 3 else str(n)
        parts.extend(["", _MULTI_VARIANTS.format(n=word)])
    return "\n".join(parts)


class SubstitutionResult(NamedTuple):
    text: str
    replaced: bool


def substitute_subject(text: str, subject: str) -> SubstitutionResult:
    """Swap the 'The person' subject phrase for another subject.

    The leading occurrence keeps the subject's capitalization; interior
    lowercase occurrences get a lowercased first letter. Returns the new
    text plus whether anything was replaced.
    """
    if not subject or not subject.strip():
        raise ConfigError("substitute subject must be non-empty")
    replaced = False
    out = text
    if out.startswith(DEFAULT_SUBJECT):
        out = subject + out[len(DEFAULT_SUBJECT):]
        replaced = True
    lowered = DEFAULT_SUBJECT.lower()
    if lowered in out:
        interior_subject = subject[0].lower() + subject[1:] if subject else subject
        out = out.replace(lowered, interior_subject)
        replaced = True
    return SubstitutionResult(out, replaced)
