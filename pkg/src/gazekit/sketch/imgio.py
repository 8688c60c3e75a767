"""PGM (P5) and 8-bit grayscale PNG encode/decode."""

from __future__ import annotations

import struct
import zlib

import numpy as np

from ..errors import ImageFormatError

PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"

FORMATS = ("pgm", "png")


def _check_image(img) -> np.ndarray:
    img = np.asarray(img)
    if img.ndim != 2 or img.size == 0:
        raise ImageFormatError("image must be a non-empty 2-D array")
    if img.dtype != np.uint8:
        raise ImageFormatError("image must be uint8")
    return img


def pgm_bytes(img) -> bytes:
    img = _check_image(img)
    h, w = img.shape
    return f"P5\n{w} {h}\n255\n".encode("ascii") + img.tobytes()


def read_pgm_bytes(data: bytes) -> np.ndarray:
    tokens = []
    pos = 0
    while len(tokens) < 4:
        while pos < len(data) and data[pos : pos + 1].isspace():
            pos += 1
        if data[pos : pos + 1] == b"#":
            while pos < len(data) and data[pos : pos + 1] != b"\n":
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos : pos + 1].isspace():
            pos += 1
        tokens.append(data[start:pos])
    if tokens[0] != b"P5":
        raise ImageFormatError("not a P5 PGM file")
    w, h, maxval = (int(t) for t in tokens[1:4])
    if maxval != 255:
        raise ImageFormatError(f"unsupported maxval {maxval}")
    pos += 1  # single whitespace byte after the header
    payload = data[pos : pos + w * h]
    if len(payload) != w * h:
        raise ImageFormatError("truncated PGM payload")
    return np.frombuffer(payload, dtype=np.uint8).reshape(h, w).copy()


def _chunk(kind: bytes, payload: bytes) -> bytes:
    crc = zlib.crc32(payload, zlib.crc32(kind))
    return struct.pack(">I", len(payload)) + kind + payload + struct.pack(">I", crc)


def png_bytes(img) -> bytes:
    """Minimal 8-bit grayscale PNG: one IDAT, filter 0 on every row."""
    img = _check_image(img)
    h, w = img.shape
    ihdr = struct.pack(">IIBBBBB", w, h, 8, 0, 0, 0, 0)
    raw = bytearray()
    for row in img:
        raw.append(0)
        raw.extend(row.tobytes())
    return (
        PNG_SIGNATURE
        + _chunk(b"IHDR", ihdr)
        + _chunk(b"IDAT", zlib.compress(bytes(raw), 9))
        + _chunk(b"IEND", b"")
    )


def _unfilter(kind, row, prev):
    if kind == 0:
        return row
    out = row.copy()
    if kind == 1:  # sub
        for i in range(1, len(out)):
            out[i] = (out[i] + out[i - 1]) & 0xFF
    elif kind == 2:  # up
        out = (out + prev) & 0xFF
    elif kind == 3:  # average
        for i in range(len(out)):
            left = out[i - 1] if i else 0
            out[i] = (out[i] + (int(left) + int(prev[i])) // 2) & 0xFF
    elif kind == 4:  # paeth
        for i in range(len(out)):
            a = int(out[i - 1]) if i else 0
            b = int(prev[i])
            c = int(prev[i - 1]) if i else 0
            p = a + b - c
            pa, pb, pc = abs(p - a), abs(p - b), abs(p - c)
            pred = a if pa <= pb and pa <= pc else (b if pb <= pc else c)
            out[i] = (out[i] + pred) & 0xFF
    else:
        raise ImageFormatError(f"unsupported PNG filter {kind}")
    return out


def read_png_bytes(data: bytes) -> np.ndarray:
    if not data.startswith(PNG_SIGNATURE):
        raise ImageFormatError("not a PNG file")
    pos = len(PNG_SIGNATURE)
    width = height = None
    idat = bytearray()
    while pos < len(data):
        (length,) = struct.unpack(">I", data[pos : pos + 4])
        kind = data[pos + 4 : pos + 8]
        payload = data[pos + 8 : pos + 8 + length]
        pos += 12 + length
        if kind == b"IHDR":
            width, height, depth, color, _, _, interlace = struct.unpack(">IIBBBBB", payload)
            if depth != 8 or color != 0:
                raise ImageFormatError("only 8-bit grayscale PNG supported")
            if interlace:
                raise ImageFormatError("interlaced PNG unsupported")
        elif kind == b"IDAT":
            idat.extend(payload)
        elif kind == b"IEND":
            break
    if width is None:
        raise ImageFormatError("missing IHDR")
    raw = zlib.decompress(bytes(idat))
    stride = width + 1
    if len(raw) != stride * height:
        raise ImageFormatError("bad PNG payload size")
    img = np.zeros((height, width), dtype=np.uint8)
    prev = np.zeros(width, dtype=np.uint8)
    for y in range(height):
        line = raw[y * stride : (y + 1) * stride]
        row = _unfilter(line[0], np.frombuffer(line[1:], dtype=np.uint8).copy(), prev)
        img[y] = row
        prev = row
    return img


def encode_image(img, fmt: str, path) -> int:
    """Write the image in the given format; returns bytes written."""
    if fmt not in FORMATS:
        raise ImageFormatError(f"format must be one of {FORMATS}")
    data = pgm_bytes(img) if fmt == "pgm" else png_bytes(img)
    with open(path, "wb") as fh:
        fh.write(data)
    return len(data)


def decode_image(path) -> np.ndarray:
    with open(path, "rb") as fh:
        data = fh.read()
    if data.startswith(PNG_SIGNATURE):
        return read_png_bytes(data)
    if data.startswith(b"P5"):
        return read_pgm_bytes(data)
    raise ImageFormatError(f"unrecognized image format in {path}")
