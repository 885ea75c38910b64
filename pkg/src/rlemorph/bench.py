"""Benchmark sweep over structuring-element sizes and algorithm variants.

Only the operator call is timed; loading, generation and encoding stay
outside the timed section.  One warm-up call per case is discarded, then
the mean over the configured number of iterations is reported.  Failing
cases get a status note instead of aborting the sweep.
"""
from __future__ import annotations

import csv
import io
import re
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from . import generate, morphology, oracle
from .rle import RleImage, bounding_rect, complement_within, reflect, translate, Point
from .imgio import read_pbm, read_rle_text

CSV_FIELDS = [
    "algorithm",
    "op",
    "se_shape",
    "se_size",
    "mean_ms",
    "runs_out",
    "pixels_out",
    "status",
]

ALGORITHMS = (
    "fast-erode",
    "fast-dilate",
    "naive-erode",
    "naive-dilate",
    "runs-erode",
    "runs-dilate",
)


class BenchConfigError(ValueError):
    pass


@dataclass
class BenchConfig:
    image_source: str
    se_shape: str = "square"  # square | diamond | file
    se_sizes: tuple[int, ...] = (3,)
    algorithms: tuple[str, ...] = ("fast-erode",)
    iterations: int = 3
    se_path: str | None = None

    def __post_init__(self) -> None:
        if not self.se_sizes:
            raise BenchConfigError("se_sizes must not be empty")
        if self.iterations < 1:
            raise BenchConfigError("iterations must be >= 1")
        if self.se_shape not in ("square", "diamond", "file"):
            raise BenchConfigError(f"unknown se_shape {self.se_shape!r}")
        if self.se_shape == "file" and not self.se_path:
            raise BenchConfigError("se_shape 'file' requires se_path")
        for algo in self.algorithms:
            if algo not in ALGORITHMS:
                raise BenchConfigError(f"unknown algorithm {algo!r}")


def _dilate_via_runs(x: RleImage, se: RleImage) -> RleImage:
    """Run-decomposition dilation through the complement construction."""
    if x.is_empty:
        return RleImage()
    sb = bounding_rect(se)
    v = Point(-(sb.l + sb.r) // 2, -(sb.t + sb.b) // 2)
    se0 = translate(se, v)
    rb = bounding_rect(x)
    rec_dil = rb.grown(sb.width, sb.height)
    rec_ero = rb.grown(2 * sb.width, 2 * sb.height)
    out = complement_within(
        oracle.erode_runs(complement_within(x, rec_ero), reflect(se0)), rec_dil
    )
    return translate(out, Point(-v.x, -v.y))


_OPERATORS: dict[str, Callable[[RleImage, RleImage], RleImage]] = {
    "fast-erode": morphology.erode,
    "fast-dilate": morphology.dilate,
    "naive-erode": oracle.erode_naive,
    "naive-dilate": oracle.dilate_naive,
    "runs-erode": oracle.erode_runs,
    "runs-dilate": _dilate_via_runs,
}

_SYNTH_RE = re.compile(
    r"^(random|blobs):(\d+)x(\d+)(?::density=([0-9.]+))?(?::seed=(\d+))?$"
)


def load_image_source(source: str) -> RleImage:
    """A file path, or a synthetic spec like 'blobs:1024x1024:seed=1' or
    'random:256x256:density=0.4:seed=7'."""
    m = _SYNTH_RE.match(source)
    if m:
        kind, w, h, density, seed = m.groups()
        w, h = int(w), int(h)
        seed = int(seed) if seed else 0
        if kind == "random":
            return generate.random_image(w, h, float(density or 0.5), seed)
        return generate.blob_image(w, h, seed=seed)
    path = Path(source)
    data = path.read_bytes()
    if data[:2] in (b"P1", b"P4"):
        img, _ = read_pbm(data)
        return img
    return read_rle_text(data.decode())


def _make_se(config: BenchConfig, size: int) -> RleImage:
    if config.se_shape == "square":
        return generate.square_se(size)
    if config.se_shape == "diamond":
        return generate.diamond_se(size)
    return load_image_source(config.se_path)


def run_bench(
    config: BenchConfig, clock: Callable[[], float] = time.perf_counter
) -> list[dict]:
    image = load_image_source(config.image_source)
    rows: list[dict] = []
    for size in config.se_sizes:
        try:
            se = _make_se(config, size)
        except Exception as exc:
            for algo in config.algorithms:
                rows.append(_error_row(algo, config.se_shape, size, exc))
            continue
        for algo in config.algorithms:
            fn = _OPERATORS[algo]
            kind, op = algo.split("-")
            try:
                fn(image, se)  # warm-up, not timed
                elapsed = []
                for _ in range(config.iterations):
                    t0 = clock()
                    result = fn(image, se)
                    t1 = clock()
                    elapsed.append(t1 - t0)
                rows.append(
                    {
                        "algorithm": kind,
                        "op": op,
                        "se_shape": config.se_shape,
                        "se_size": size,
                        "mean_ms": sum(elapsed) / len(elapsed) * 1000.0,
                        "runs_out": len(result.runs),
                        "pixels_out": result.pixel_count(),
                        "status": "ok",
                    }
                )
            except Exception as exc:
                rows.append(_error_row(algo, config.se_shape, size, exc))
    return rows


def _error_row(algo: str, shape: str, size: int, exc: Exception) -> dict:
    kind, _, op = algo.partition("-")
    return {
        "algorithm": kind,
        "op": op,
        "se_shape": shape,
        "se_size": size,
        "mean_ms": "",
        "runs_out": "",
        "pixels_out": "",
        "status": f"error: {exc}",
    }


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
