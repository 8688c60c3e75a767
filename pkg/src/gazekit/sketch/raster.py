"""Minimal scanline/Bresenham rasterization over numpy arrays.

Pixel (row v, col u) covers the unit square centered on the continuous
point (u, v); polygon membership is decided at pixel centers with the
even-odd rule, which makes fills exactly mirror-symmetric about a
half-integer principal point.
"""

from __future__ import annotations

import numpy as np


def _px(value: float) -> int:
    return int(np.floor(value + 0.5))


def draw_line(img, p0, p1, value):
    """Integer Bresenham stroke between two continuous endpoints."""
    x0, y0 = _px(p0[0]), _px(p0[1])
    x1, y1 = _px(p1[0]), _px(p1[1])
    h, w = img.shape
    dx = abs(x1 - x0)
    dy = -abs(y1 - y0)
    sx = 1 if x0 < x1 else -1
    sy = 1 if y0 < y1 else -1
    err = dx + dy
    while True:
        if 0 <= y0 < h and 0 <= x0 < w:
            img[y0, x0] = value
        if x0 == x1 and y0 == y1:
            break
        e2 = 2 * err
        if e2 >= dy:
            err += dy
            x0 += sx
        if e2 <= dx:
            err += dx
            y0 += sy


def draw_polyline(img, points, value, closed=False):
    points = np.asarray(points, dtype=np.float64)
    n = len(points)
    last = n if closed else n - 1
    for i in range(last):
        draw_line(img, points[i], points[(i + 1) % n], value)


def polygon_mask(shape, points):
    """Boolean even-odd fill of a polygon given in continuous pixel coords."""
    h, w = shape
    mask = np.zeros(shape, dtype=bool)
    pts = np.asarray(points, dtype=np.float64)
    if len(pts) < 3:
        return mask
    x1 = pts[:, 0]
    y1 = pts[:, 1]
    x2 = np.roll(x1, -1)
    y2 = np.roll(y1, -1)
    y_lo = max(0, int(np.ceil(np.min(y1))))
    y_hi = min(h - 1, int(np.floor(np.max(y1))))
    cols = np.arange(w)
    for row in range(y_lo, y_hi + 1):
        yc = float(row)
        # half-open span test avoids double-counting shared vertices
        crosses = ((y1 <= yc) & (y2 > yc)) | ((y2 <= yc) & (y1 > yc))
        if not np.any(crosses):
            continue
        t = (yc - y1[crosses]) / (y2[crosses] - y1[crosses])
        xs = np.sort(x1[crosses] + t * (x2[crosses] - x1[crosses]))
        inside = np.zeros(w, dtype=bool)
        for xa, xb in zip(xs[0::2], xs[1::2]):
            inside |= (cols > xa) & (cols < xb)
        mask[row] |= inside
    return mask


def dilate1(mask):
    """3x3 binary dilation (numpy-only)."""
    padded = np.pad(mask, 1)
    out = np.zeros_like(mask)
    for dy in (-1, 0, 1):
        for dx in (-1, 0, 1):
            out |= padded[1 + dy : 1 + dy + mask.shape[0], 1 + dx : 1 + dx + mask.shape[1]]
    return out


def masks_match_within_1px(a, b) -> bool:
    """True when every set pixel of each mask has a neighbor in the other."""
    return bool(np.all(~a | dilate1(b)) and np.all(~b | dilate1(a)))
