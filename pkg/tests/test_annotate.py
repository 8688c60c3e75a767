import itertools

import pytest

from gazekit.annotate import (
    PromptSpec,
    band_sign,
    bucketize,
    build_prompt,
    parse_directions,
    substitute_subject,
    template_annotate,
    validate_description,
)
from gazekit.annotate.buckets import BANDS
from gazekit.errors import ConfigError, UnparseableTextError
from gazekit.grid import GridSpec, PoseSample, enumerate_and_filter, select_convention


def sample(head, gaze, sid=0, eye=(0.0, 0.0)):
    return PoseSample(id=sid, head=head, eye=eye, gaze=gaze)


class TestBuckets:
    def test_thresholds(self):
        assert bucketize(0) == "center"
        assert bucketize(4.9) == "center"
        assert bucketize(5) == "slight-pos"
        assert bucketize(-24.9) == "slight-neg"
        assert bucketize(25) == "mid-pos"
        assert bucketize(60) == "mid-pos"
        assert bucketize(-60.1) == "extreme-neg"
        assert bucketize(110) == "extreme-pos"


class TestBuildPrompt:
    def test_low_precision_requirements(self):
        prompt = build_prompt(sample((0, 0), (0, 0)), PromptSpec(precision="low"))
        assert "Avoid numerical values for angles" in prompt
        assert "Offer rough direction descriptions regardless of extent" in prompt
        assert "Be one sentence and within 10 words" in prompt
        assert "Begin with 'The person'" in prompt
        assert "Please give me" not in prompt

    def test_high_precision_requirements(self):
        prompt = build_prompt(sample((0, 0), (0, 0)), PromptSpec(precision="high"))
        assert "Offer precise direction descriptions with a clear extent" in prompt
        assert "between 20 and 30 words" in prompt
        assert prompt.endswith("Please give me three different descriptions.")

    def test_values_line(self):
        prompt = build_prompt(sample((60, 0), (109, 10)), PromptSpec(precision="low"))
        assert "Head yaw: 60. Head pitch: 0. Gaze yaw: 109. Gaze pitch: 10." in prompt

    def test_non_integral_angles(self):
        prompt = build_prompt(sample((60, 0), (109.5, 10)), PromptSpec(precision="low"))
        assert "Gaze yaw: 109.5." in prompt

    def test_bad_spec(self):
        with pytest.raises(ConfigError):
            build_prompt(sample((0, 0), (0, 0)), PromptSpec(precision="low", n_variants=0))


class TestTemplates:
    def test_center_sentence(self):
        text = template_annotate(sample((0, 0), (0, 0)), "low", 0)
        assert "straight ahead" in text
        assert text.startswith("The person")
        assert len(text.split()) <= 10

    def test_left_up_sentence(self):
        text = template_annotate(sample((60, 0), (109, 10)), "low", 0)
        assert "left" in text
        up_cue = ("up" in text.split()) or ("up-left" in text) or ("upward" in text)
        assert up_cue

    def test_deterministic(self):
        s = sample((60, 0), (109, 10), sid=42)
        assert template_annotate(s, "low", 0) == template_annotate(s, "low", 0)
        assert template_annotate(s, "high", 2) == template_annotate(s, "high", 2)

    def test_variant_seeds_differ(self):
        s = sample((20, -30), (40, -35), sid=7)
        low = {template_annotate(s, "low", seed) for seed in range(3)}
        high = {template_annotate(s, "high", seed) for seed in range(3)}
        assert len(low) == 3
        assert len(high) == 3

    def test_all_band_combinations_fit_budget_and_validate(self):
        reps = {
            "extreme-neg": -65.0,
            "mid-neg": -40.0,
            "slight-neg": -10.0,
            "center": 0.0,
            "slight-pos": 10.0,
            "mid-pos": 40.0,
            "extreme-pos": 65.0,
        }
        combos = itertools.product(BANDS, repeat=4)
        for i, (hy, hp, gy, gp) in enumerate(combos):
            s = sample((reps[hy], reps[hp]), (reps[gy], reps[gp]), sid=i)
            for seed in range(3):
                for precision in ("low", "high"):
                    text = template_annotate(s, precision, seed)
                    report = validate_description(text, precision)
                    assert report.ok, (text, report.violations)


class TestSubstituteSubject:
    def test_basic(self):
        out = substitute_subject("The person kept the head still.", "The girl")
        assert out.text == "The girl kept the head still."
        assert out.replaced

    def test_identity(self):
        out = substitute_subject("The person kept the head still.", "The person")
        assert out.text == "The person kept the head still."

    def test_interior(self):
        out = substitute_subject("Watching, the person looked away.", "The farmer")
        assert out.text == "Watching, the farmer looked away."

    def test_missing_phrase_flagged(self):
        out = substitute_subject("Nobody moved at all.", "The boy")
        assert out.text == "Nobody moved at all."
        assert not out.replaced

    def test_empty_subject(self):
        with pytest.raises(ConfigError):
            substitute_subject("The person looked away.", "  ")

    def test_word_count_stable(self):
        text = "The person kept the head and the gaze straight ahead."
        out = substitute_subject(text, "The farmer")
        assert len(out.text.split()) == len(text.split())


class TestParseDirections:
    def test_paper_style_left_up(self):
        parsed = parse_directions(
            "The person's head turns left, gaze shifts left and slightly up"
        )
        assert parsed.bands["head-yaw"].endswith("pos")
        assert parsed.bands["gaze-yaw"].endswith("pos")
        assert parsed.bands["gaze-pitch"] == "slight-pos"

    def test_all_center(self):
        parsed = parse_directions("The person kept the head and the gaze straight ahead")
        assert all(band == "center" for band in parsed.bands.values())

    def test_unparseable(self):
        with pytest.raises(UnparseableTextError):
            parse_directions("The weather is nice")

    def test_unmentioned_axes_low_confidence(self):
        parsed = parse_directions("The person turns the head left, gaze right.")
        assert parsed.confidence["head-pitch"] == "low"
        assert parsed.bands["head-pitch"] == "center"
        assert parsed.confidence["head-yaw"] == "high"


class TestValidateDescription:
    def test_valid_low(self):
        assert validate_description(
            "The person tilts the head right, gazing up and left", "low"
        ).ok

    def test_numeric_angle(self):
        report = validate_description("The person's gaze is 60 degrees upward", "low")
        assert any(rule == "numeric-angle" for rule, _ in report.violations)

    def test_high_length(self):
        text = "The person turns the head left and casts the gaze right now"
        report = validate_description(text, "high")
        assert any(rule == "word-count" for rule, _ in report.violations)

    def test_missing_mentions(self):
        report = validate_description("The person looks away quickly", "low")
        assert any(rule == "mentions-head" for rule, _ in report.violations)

    def test_multi_sentence(self):
        report = validate_description("The person turns the head. The gaze follows.", "low")
        assert any(rule == "single-sentence" for rule, _ in report.violations)


class TestRoundTrip:
    def test_full_grid_low_precision(self):
        conv, _ = select_convention(GridSpec())
        samples = enumerate_and_filter(GridSpec(), conv)
        for s in samples:
            parsed = parse_directions(template_annotate(s, "low", 0))
            for axis, value in (
                ("head-yaw", s.head[0]),
                ("head-pitch", s.head[1]),
                ("gaze-yaw", s.gaze[0]),
                ("gaze-pitch", s.gaze[1]),
            ):
                band = parsed.bands[axis]
                if abs(value) < 5.0:
                    assert band == "center", (s, axis, band)
                else:
                    assert band_sign(band) == (1 if value > 0 else -1), (s, axis, band)

    def test_subset_multiple_seeds(self):
        conv, _ = select_convention(GridSpec())
        samples = enumerate_and_filter(GridSpec(), conv)[:: 97]
        for s in samples:
            for seed in range(3):
                parsed = parse_directions(template_annotate(s, "low", seed))
                for axis, value in (
                    ("head-yaw", s.head[0]),
                    ("head-pitch", s.head[1]),
                    ("gaze-yaw", s.gaze[0]),
                    ("gaze-pitch", s.gaze[1]),
                ):
                    band = parsed.bands[axis]
                    if abs(value) < 5.0:
                        assert band == "center"
                    else:
                        assert band_sign(band) == (1 if value > 0 else -1)
