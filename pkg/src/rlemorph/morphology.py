"""Fast erosion and dilation on compact RLE images.

Erosion anchors the structuring element at the rightmost pixel of its
longest run, reduces it to a skeleton (one entry per run: the rightmost
pixel plus the run length), and scans only the trimmed input ``x_cut``
using left/right distance tables.  A failed probe with deficit k lets the
scan jump k candidates to the right (jump on miss); a successful probe
yields the full eroded run from the minimum right distance over the
skeleton (jump on hit).  Dilation is erosion of the complement with the
reflected element, restricted to finite rectangles.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .rle import (
    EMPTY,
    Point,
    Rect,
    RleImage,
    Run,
    bounding_rect,
    complement_within,
    reflect,
    translate,
)

# The horizontal jump set and its reflection.  The left distance table is
# the erosion transform w.r.t. JUMP_SET, the right table w.r.t. its
# reflection.
JUMP_SET = (Point(-1, 0), Point(0, 0))
JUMP_SET_REFLECTED = (Point(0, 0), Point(1, 0))


try:
    from numba import njit as _njit
except ImportError:  # pragma: no cover - numba is an optional accelerator
    _njit = None


class EmptyStructuringElementError(ValueError):
    """Erosion/dilation by the empty set is not representable as a finite
    image."""


@dataclass(frozen=True)
class SkeletonTable:
    """Skeleton of the structuring element translated so that the rightmost
    pixel of its longest run sits at the origin.

    entries: (point, depth) per run of the translated element, where the
    point is the run's rightmost pixel and depth its length.
    """

    entries: tuple[tuple[Point, int], ...]
    l_min: int
    l_max: int
    anchor_q: Point


@dataclass(frozen=True)
class ErosionTables:
    """Left/right distance grids over the input's bounding box (1-cell zero
    margin) plus the trimmed image x_cut.

    Grid cell [gy, gx] holds the value at image point
    (offset.x + gx, offset.y + gy).  Probes outside the grid read as 0.
    """

    left: np.ndarray
    right: np.ndarray
    offset: Point
    x_cut: RleImage


@dataclass
class ErodeTrace:
    """Optional instrumentation collected by erode().

    Coordinates are in the anchored (pre-final-translation) frame:
    a candidate h means the element translated by -anchor_q was probed at h.
    """

    candidates: int = 0
    probes: int = 0
    # (x, y, k): probe at (x, y) missed with deficit k; (x..x+k-1, y) skipped.
    jumps: list[tuple[int, int, int]] = field(default_factory=list)
    # (x, y, n): hit at (x, y) emitted a run of length n.
    hits: list[tuple[int, int, int]] = field(default_factory=list)
    candidate_positions: list[tuple[int, int]] = field(default_factory=list)


def generate_skeleton(se: RleImage) -> SkeletonTable:
    """Anchor the element and list one (rightmost pixel, run length) entry
    per run.  Among equally longest runs the first in (y, lx) order wins."""
    if se.is_empty:
        raise EmptyStructuringElementError("empty structuring element")
    best = se.runs[0]
    for r in se.runs[1:]:
        if r.length > best.length:
            best = r
    q = Point(best.rx, best.y)
    entries = []
    l_min = l_max = se.runs[0].length
    for r in se.runs:
        entries.append((Point(r.rx - q.x, r.y - q.y), r.length))
        l_min = min(l_min, r.length)
        l_max = max(l_max, r.length)
    return SkeletonTable(tuple(entries), l_min, l_max, q)


def build_tables(x: RleImage, l_min: int, l_max: int) -> ErosionTables:
    """Fill the left/right distance grids and trim the input.

    Runs shorter than l_min cannot contain any part of a hit and are left
    zero in the tables; runs shorter than l_max vanish from x_cut, the
    survivors lose their first l_max - 1 pixels.
    """
    if not (1 <= l_min <= l_max):
        raise ValueError(f"need 1 <= l_min <= l_max, got {l_min}, {l_max}")
    rect = bounding_rect(x)
    if rect is None:
        z = np.zeros((0, 0), dtype=np.int32)
        return ErosionTables(z, z, Point(0, 0), EMPTY)
    h, w = rect.height + 2, rect.width + 2
    offset = Point(rect.l - 1, rect.t - 1)
    left = np.zeros((h, w), dtype=np.int32)
    right = np.zeros((h, w), dtype=np.int32)
    cut: list[Run] = []
    for run in x.runs:
        n = run.length
        if n < l_min:
            continue
        gy = run.y - offset.y
        gx = run.lx - offset.x
        left[gy, gx : gx + n] = np.arange(1, n + 1, dtype=np.int32)
        right[gy, gx : gx + n] = np.arange(n, 0, -1, dtype=np.int32)
        if n >= l_max:
            cut.append(Run(run.lx + l_max - 1, run.rx, run.y))
    return ErosionTables(left, right, offset, RleImage(tuple(cut)))


def erode_check_at(tables: ErosionTables, skel: SkeletonTable, h: Point) -> bool:
    """True iff the anchored element fits at h, checked via skeleton probes
    against the left table.  Out-of-grid probes read as 0."""
    left = tables.left
    rows, cols = left.shape
    ox, oy = tables.offset
    for (sx, sy), depth in skel.entries:
        gx = h.x + sx - ox
        gy = h.y + sy - oy
        v = int(left[gy, gx]) if 0 <= gy < rows and 0 <= gx < cols else 0
        if depth > v:
            return False
    return True


def _scan_kernel(left, right, ox, oy, cut, entries, out):
    """Untraced jump-scan over packed arrays; returns the emitted run count.

    Same control flow as the traced Python scan in _scan; keep the two in
    sync (a regression test asserts identical output).
    """
    n_out = 0
    rows, cols = left.shape
    n_entries = entries.shape[0]
    for ri in range(cut.shape[0]):
        lx0 = cut[ri, 0]
        rx0 = cut[ri, 1]
        y0 = cut[ri, 2]
        gy_base = y0 - oy
        x = lx0
        ver_idx = -1
        ver_x = lx0 - 1
        while x <= rx0:
            miss = False
            diff = 0
            idx = 0
            for idx in range(n_entries):
                if idx == ver_idx and x == ver_x:
                    continue
                sx = entries[idx, 0]
                sy = entries[idx, 1]
                depth = entries[idx, 2]
                gy = gy_base + sy
                gx = x + sx - ox
                v = left[gy, gx] if 0 <= gy < rows and 0 <= gx < cols else 0
                diff = depth - v
                while diff > 0:
                    miss = True
                    x += diff
                    if x > rx0:
                        break
                    gx = x + sx - ox
                    v = left[gy, gx] if 0 <= gy < rows and 0 <= gx < cols else 0
                    diff = depth - v
                if miss:
                    break
            if miss:
                if x <= rx0 and diff <= 0:
                    ver_idx = idx
                    ver_x = x
            else:
                min_dist = 1 << 60
                for j in range(n_entries):
                    gy = gy_base + entries[j, 1]
                    gx = x + entries[j, 0] - ox
                    v = right[gy, gx] if 0 <= gy < rows and 0 <= gx < cols else 0
                    if v < min_dist:
                        min_dist = v
                out[n_out, 0] = x
                out[n_out, 1] = x + min_dist - 1
                out[n_out, 2] = y0
                n_out += 1
                x += min_dist + 1
    return n_out


if _njit is not None:
    _scan_kernel = _njit(cache=True)(_scan_kernel)


def _scan_fast(tables: ErosionTables, skel: SkeletonTable) -> list[Run]:
    cut = np.array(tables.x_cut.runs, dtype=np.int64)
    entries = np.array(
        [(s.x, s.y, depth) for s, depth in skel.entries], dtype=np.int64
    )
    out = np.empty((tables.x_cut.pixel_count(), 3), dtype=np.int64)
    n = _scan_kernel(
        tables.left, tables.right, tables.offset.x, tables.offset.y, cut,
        entries, out,
    )
    return [Run(int(a), int(b), int(c)) for a, b, c in out[:n]]


def _scan(tables: ErosionTables, skel: SkeletonTable, trace: ErodeTrace | None) -> list[Run]:
    """Jump-scan of x_cut.  Returns the eroded runs in the anchored frame."""
    if tables.x_cut.is_empty:
        return []
    if trace is None:
        return _scan_fast(tables, skel)
    left = tables.left.tolist()
    right = tables.right.tolist()
    rows = len(left)
    cols = len(left[0]) if rows else 0
    ox, oy = tables.offset
    entries = [(s.x, s.y, depth) for s, depth in skel.entries]
    out: list[Run] = []
    for lx0, rx0, y0 in tables.x_cut.runs:
        gy_base = y0 - oy
        # Per-run view of the tables: row per skeleton entry, or None when
        # the probe row falls outside the grid.
        probe_rows = []
        for sx, sy, depth in entries:
            gy = gy_base + sy
            if 0 <= gy < rows:
                probe_rows.append((sx - ox, left[gy], right[gy], depth))
            else:
                probe_rows.append((sx - ox, None, None, depth))
        x = lx0
        counted_upto = lx0 - 1
        # (index, x) of an entry already verified at the current position by
        # a jump that landed here; skipped when the entry pass restarts.
        verified = (-1, lx0 - 1)
        while x <= rx0:
            if trace is not None and x > counted_upto:
                trace.candidates += 1
                trace.candidate_positions.append((x, y0))
                counted_upto = x
            miss = False
            for idx, (ex, lrow, rrow, depth) in enumerate(probe_rows):
                if verified == (idx, x):
                    continue
                gx = x + ex
                v = lrow[gx] if lrow is not None and 0 <= gx < cols else 0
                if trace is not None:
                    trace.probes += 1
                diff = depth - v
                while diff > 0:
                    miss = True
                    if trace is not None:
                        trace.jumps.append((x, y0, diff))
                    x += diff
                    if x > rx0:
                        break
                    gx = x + ex
                    v = lrow[gx] if lrow is not None and 0 <= gx < cols else 0
                    if trace is not None:
                        trace.probes += 1
                        if x > counted_upto:
                            trace.candidates += 1
                            trace.candidate_positions.append((x, y0))
                            counted_upto = x
                    diff = depth - v
                if miss:
                    if x <= rx0 and diff <= 0:
                        verified = (idx, x)
                    break
            if not miss:
                min_dist = None
                for ex, lrow, rrow, depth in probe_rows:
                    gx = x + ex
                    v = rrow[gx] if rrow is not None and 0 <= gx < cols else 0
                    if min_dist is None or v < min_dist:
                        min_dist = v
                out.append(Run(x, x + min_dist - 1, y0))
                if trace is not None:
                    trace.hits.append((x, y0, min_dist))
                x += min_dist + 1
    return out


def erode(x: RleImage, se: RleImage, trace: ErodeTrace | None = None) -> RleImage:
    """Exact erosion of x by an arbitrary non-empty structuring element."""
    skel = generate_skeleton(se)
    tables = build_tables(x, skel.l_min, skel.l_max)
    runs = _scan(tables, skel, trace)
    q = skel.anchor_q
    return translate(RleImage(tuple(runs)), Point(-q.x, -q.y))


def dilate(x: RleImage, se: RleImage) -> RleImage:
    """Exact dilation via duality: complement, erode by the reflected
    element, complement back, all restricted to finite rectangles."""
    if se.is_empty:
        raise EmptyStructuringElementError("empty structuring element")
    if x.is_empty:
        return EMPTY
    sb = bounding_rect(se)
    # Shift the element so its box straddles the origin; dilation commutes
    # with SE translation, and the rectangle bounds below assume it.
    v = Point(-(sb.l + sb.r) // 2, -(sb.t + sb.b) // 2)
    se0 = translate(se, v)
    w, h = sb.width, sb.height
    rb = bounding_rect(x)
    rec_dil = rb.grown(w, h)
    rec_ero = rb.grown(2 * w, 2 * h)
    x_comp = complement_within(x, rec_ero)
    eroded = erode(x_comp, reflect(se0))
    out = complement_within(eroded, rec_dil)
    return translate(out, Point(-v.x, -v.y))
