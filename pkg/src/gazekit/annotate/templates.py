"""Deterministic offline description generator.

Sentences are assembled from small phrase tables so that every output
stays within the word budget of its precision level and parses back to
the correct direction bands. Synonym choices are keyed by a splitmix
hash of (sample_id, variant_seed); the same inputs always yield the same
byte-identical sentence, and variant seeds 0..2 are guaranteed to differ.
"""

from __future__ import annotations

from importlib import resources

from ..errors import ConfigError
from ..util import mix_seed, splitmix64
from .buckets import band_grade, band_sign, bucketize
from .records import TextRecord

_TABLES = None
_TABLES_PATH = None

_REQUIRED_SECTIONS = (
    "verb.low.move",
    "verb.low.hold",
    "verb.high.move",
    "verb.high.hold",
    "verb.high.gaze",
    "dir.yaw.pos",
    "dir.yaw.neg",
    "dir.pitch.pos",
    "dir.pitch.neg",
    "extent.slight",
    "extent.mid",
    "extent.extreme",
    "flourish",
)


def parse_phrase_tables(text: str) -> dict:
    tables = {}
    section = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1]
            tables.setdefault(section, [])
        elif section is None:
            raise ConfigError(f"phrase line outside any section: {line!r}")
        else:
            tables[section].append(line)
    missing = [s for s in _REQUIRED_SECTIONS if not tables.get(s)]
    if missing:
        raise ConfigError(f"phrase tables missing sections: {missing}")
    return tables


def load_phrase_tables(path=None) -> dict:
    """Load phrase tables from the embedded asset or an override file."""
    global _TABLES, _TABLES_PATH
    if _TABLES is not None and path == _TABLES_PATH:
        return _TABLES
    if path is None:
        text = resources.files(__package__).joinpath("phrases.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    _TABLES = parse_phrase_tables(text)
    _TABLES_PATH = path
    return _TABLES


class _Picker:
    """Deterministic synonym picker.

    ``pick`` hashes (sample_id, seed, slot); ``pick_cyclic`` advances
    through the options with the seed so nearby seeds always differ.
    """

    def __init__(self, sample_id: int, seed: int):
        self.h = mix_seed(sample_id, seed)
        self.base = splitmix64(sample_id & ((1 << 64) - 1))
        self.seed = seed

    def pick(self, options, slot: int):
        return options[splitmix64(self.h ^ slot) % len(options)]

    def pick_index_cyclic(self, n: int, slot: int) -> int:
        return (splitmix64(self.base ^ slot) + self.seed) % n


def _dir_words(yaw_band, pitch_band, pick, slot):
    """Canonical direction words for a (yaw, pitch) band pair."""
    words = {}
    if band_sign(yaw_band) != 0:
        words["yaw"] = pick(
            f"dir.yaw.{'pos' if band_sign(yaw_band) > 0 else 'neg'}", slot
        )
    if band_sign(pitch_band) != 0:
        words["pitch"] = pick(
            f"dir.pitch.{'pos' if band_sign(pitch_band) > 0 else 'neg'}", slot + 1
        )
    return words


def _compact(yaw_band, pitch_band):
    """One-word direction: single axis word or a pitch-yaw compound."""
    sy, sp = band_sign(yaw_band), band_sign(pitch_band)
    yaw = "left" if sy > 0 else "right"
    pitch = "up" if sp > 0 else "down"
    if sy and sp:
        return f"{pitch}-{yaw}"
    return yaw if sy else pitch


def _word_count(sentence: str) -> int:
    return len(sentence.split())


def _low_sentence(head_bands, gaze_bands, picker, tables):
    def pick(table, slot):
        return picker.pick(tables[table], slot)

    hy, hp = head_bands
    gy, gp = gaze_bands
    head_center = band_sign(hy) == 0 and band_sign(hp) == 0
    gaze_center = band_sign(gy) == 0 and band_sign(gp) == 0

    hold_opts = tables["verb.low.hold"]
    move_opts = tables["verb.low.move"]
    hold = hold_opts[picker.pick_index_cyclic(len(hold_opts), 1)]
    move = move_opts[picker.pick_index_cyclic(len(move_opts), 2)]

    if head_center and gaze_center:
        return f"The person {hold} the head and the gaze straight ahead."

    if head_center:
        gw = _dir_words(gy, gp, pick, 10)
        if len(gw) == 2:
            gphrase = f"{gw['yaw']} and {gw['pitch']}"
        else:
            gphrase = gw.get("yaw") or gw.get("pitch")
        return f"The person {hold} the head still, gazing {gphrase}."

    if gaze_center:
        hw = _dir_words(hy, hp, pick, 20)
        hphrase = _compact(hy, hp) if len(hw) == 2 else (hw.get("yaw") or hw.get("pitch"))
        return f"The person {move} the head {hphrase}, gaze straight ahead."

    hw = _dir_words(hy, hp, pick, 20)
    gw = _dir_words(gy, gp, pick, 10)
    h_expanded = f"{hw['yaw']} and {hw['pitch']}" if len(hw) == 2 else None
    g_expanded = f"{gw['yaw']} and {gw['pitch']}" if len(gw) == 2 else None
    h_compact = _compact(hy, hp) if len(hw) == 2 else (hw.get("yaw") or hw.get("pitch"))
    g_compact = _compact(gy, gp) if len(gw) == 2 else (gw.get("yaw") or gw.get("pitch"))
    # prefer spelled-out two-axis phrases when the 10-word budget allows
    for hphrase, gphrase in (
        (h_expanded, g_expanded),
        (h_compact, g_expanded),
        (h_expanded, g_compact),
        (h_compact, g_compact),
    ):
        if hphrase is None or gphrase is None:
            continue
        sentence = f"The person {move} the head {hphrase}, gaze {gphrase}."
        if _word_count(sentence) <= 10:
            return sentence
    raise AssertionError("no low-precision form fits the word budget")


def _high_axis_phrase(band, axis, pick, slot):
    grade = band_grade(band)
    extent = pick(f"extent.{grade}", slot)
    direction = pick(f"dir.{axis}.{'pos' if band_sign(band) > 0 else 'neg'}", slot + 1)
    return f"{extent} {direction}"


def _high_side_phrase(yaw_band, pitch_band, pick, slot):
    sy, sp = band_sign(yaw_band), band_sign(pitch_band)
    if not sy and not sp:
        return "straight"
    parts = []
    if sy:
        parts.append(_high_axis_phrase(yaw_band, "yaw", pick, slot))
    if sp:
        parts.append(_high_axis_phrase(pitch_band, "pitch", pick, slot + 2))
    return " and ".join(parts)


def _high_sentence(head_bands, gaze_bands, picker, tables):
    def pick(table, slot):
        return picker.pick(tables[table], slot)

    hy, hp = head_bands
    gy, gp = gaze_bands
    head_center = band_sign(hy) == 0 and band_sign(hp) == 0
    head_verb = pick("verb.high.hold" if head_center else "verb.high.move", 30)
    gaze_verb = pick("verb.high.gaze", 31)
    hphrase = _high_side_phrase(hy, hp, pick, 40)
    gphrase = _high_side_phrase(gy, gp, pick, 50)
    body = (
        f"The person {head_verb} the head {hphrase} "
        f"and {gaze_verb} the gaze {gphrase}"
    )
    flourishes = tables["flourish"]
    idx = picker.pick_index_cyclic(len(flourishes), 60)
    total = _word_count(body)
    clauses = []
    while total < 20:
        phrase = flourishes[idx % len(flourishes)]
        idx += 1
        clauses.append(phrase)
        total += _word_count(phrase)
    return body + "".join(f", {c}" for c in clauses) + "."


def template_annotate(sample, precision: str, variant_seed: int) -> str:
    """Deterministic description of a pose sample at the given precision."""
    if precision not in ("low", "high"):
        raise ConfigError(f"unknown precision {precision!r}")
    tables = load_phrase_tables()
    picker = _Picker(sample.id, variant_seed)
    head_bands = (bucketize(sample.head[0]), bucketize(sample.head[1]))
    gaze_bands = (bucketize(sample.gaze[0]), bucketize(sample.gaze[1]))
    if precision == "low":
        return _low_sentence(head_bands, gaze_bands, picker, tables)
    return _high_sentence(head_bands, gaze_bands, picker, tables)


def template_records(samples, n_low: int = 1, n_high: int = 3):
    """The standard per-sample bundle: n_low low + n_high high descriptions."""
    records = []
    for sample in samples:
        for precision, count in (("low", n_low), ("high", n_high)):
            for seed in range(count):
                records.append(
                    TextRecord(
                        sample_id=sample.id,
                        head=tuple(sample.head),
                        eye=tuple(sample.eye),
                        gaze=tuple(sample.gaze),
                        precision=precision,
                        text=template_annotate(sample, precision, seed),
                        source="template",
                        variant_index=seed,
                    )
                )
    return records
