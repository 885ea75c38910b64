"""File codecs: portable bitmap (P1 ASCII / P4 binary) and a plain-text
run-length interchange format.  Both round-trip RLE images exactly.

PBM foreground is black (bit 1).  P4 packs bits MSB-first, rows padded to
byte boundaries.  The text format is one run per line, "y lx rx", sorted.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rle import EMPTY, Point, RleImage, from_raster, normalize


@dataclass(frozen=True)
class ImageFileMeta:
    width: int
    height: int
    origin_offset: Point = Point(0, 0)


class PbmParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class PbmWriteError(ValueError):
    pass


class RleTextParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"{message} (line {line})")
        self.line = line


_WS = b" \t\r\n\x0b\x0c"


def _skip_ws_and_comments(data: bytes, pos: int) -> int:
    while pos < len(data):
        c = data[pos : pos + 1]
        if c in (b"#",):
            while pos < len(data) and data[pos : pos + 1] != b"\n":
                pos += 1
        elif c and c in _WS:
            pos += 1
        else:
            break
    return pos


def _read_uint(data: bytes, pos: int, what: str) -> tuple[int, int]:
    pos = _skip_ws_and_comments(data, pos)
    start = pos
    while pos < len(data) and data[pos : pos + 1].isdigit():
        pos += 1
    if pos == start:
        raise PbmParseError(f"expected {what}", start)
    return int(data[start:pos]), pos


def read_pbm(data: bytes) -> tuple[RleImage, ImageFileMeta]:
    if data[:2] not in (b"P1", b"P4"):
        raise PbmParseError(f"bad magic {data[:2]!r}", 0)
    variant = data[:2].decode()
    pos = 2
    width, pos = _read_uint(data, pos, "width")
    height, pos = _read_uint(data, pos, "height")
    if width < 1 or height < 1:
        raise PbmParseError(f"bad dimensions {width}x{height}", pos)
    runs = []
    if variant == "P1":
        count = 0
        while count < width * height:
            pos = _skip_ws_and_comments(data, pos)
            if pos >= len(data):
                raise PbmParseError("truncated P1 payload", pos)
            c = data[pos : pos + 1]
            if c not in (b"0", b"1"):
                raise PbmParseError(f"unexpected byte {c!r} in P1 payload", pos)
            if c == b"1":
                runs.append((count % width, count % width, count // width))
            count += 1
            pos += 1
    else:
        if pos >= len(data):
            raise PbmParseError("truncated P4 header", pos)
        pos += 1  # exactly one whitespace byte after the header
        row_bytes = (width + 7) // 8
        need = row_bytes * height
        if len(data) - pos < need:
            raise PbmParseError("truncated P4 payload", len(data))
        raw = np.frombuffer(data[pos : pos + need], dtype=np.uint8)
        bits = np.unpackbits(raw.reshape(height, row_bytes), axis=1)[:, :width]
        return from_raster(bits.astype(bool)), ImageFileMeta(width, height)
    return normalize(runs), ImageFileMeta(width, height)


def write_pbm(img: RleImage, meta: ImageFileMeta, variant: str = "P1") -> bytes:
    if variant not in ("P1", "P4"):
        raise ValueError(f"unknown PBM variant {variant!r}")
    ox, oy = meta.origin_offset
    grid = np.zeros((meta.height, meta.width), dtype=bool)
    for run in img.runs:
        y = run.y - oy
        lx = run.lx - ox
        rx = run.rx - ox
        if y < 0 or y >= meta.height or lx < 0 or rx >= meta.width:
            raise PbmWriteError(
                f"run {tuple(run)} outside declared {meta.width}x{meta.height} bounds"
            )
        grid[y, lx : rx + 1] = True
    header = f"{variant}\n{meta.width} {meta.height}\n".encode()
    if variant == "P1":
        body = "\n".join(" ".join("1" if v else "0" for v in row) for row in grid)
        return header + body.encode() + b"\n"
    packed = np.packbits(grid, axis=1)
    return header + packed.tobytes()


def read_rle_text(text: str) -> RleImage:
    runs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 3:
            raise RleTextParseError(f"expected 'y lx rx', got {line!r}", lineno)
        try:
            y, lx, rx = (int(p) for p in parts)
        except ValueError:
            raise RleTextParseError(f"non-integer token in {line!r}", lineno) from None
        if lx > rx:
            raise RleTextParseError(f"lx > rx in {line!r}", lineno)
        runs.append((lx, rx, y))
    if not runs:
        return EMPTY
    return normalize(runs)


def write_rle_text(img: RleImage) -> str:
    return "".join(f"{r.y} {r.lx} {r.rx}\n" for r in img.runs)
