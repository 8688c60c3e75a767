"""Small shared helpers: hashing for deterministic choices, angle formatting."""

from __future__ import annotations

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One splitmix64 step; cheap stateless hash for deterministic picks."""
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return (z ^ (z >> 31)) & MASK64


def mix_seed(*parts: int) -> int:
    """Fold several integers into one 64-bit seed."""
    h = 0x6C62272E07BB0142
    for p in parts:
        h = splitmix64(h ^ (int(p) & MASK64))
    return h


def format_angle(value: float, max_decimals: int = 6) -> str:
    """Render an angle as an integer when integral, else a trimmed decimal.

    Idempotent for values already rounded to ``max_decimals`` digits, which
    keeps rewritten dataset files byte-identical.
    """
    r = round(float(value), max_decimals)
    if r == 0:
        r = 0.0  # normalize -0.0
    if r == int(r):
        return str(int(r))
    return f"{r:.{max_decimals}f}".rstrip("0").rstrip(".")
