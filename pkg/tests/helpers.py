"""Shared corpus generators for the randomized tests."""
from __future__ import annotations

import random

import numpy as np

from rlemorph.rle import Point, RleImage, from_raster


def random_rle_image(
    rng: random.Random,
    max_w: int = 64,
    max_h: int = 64,
    min_density: float = 0.05,
    max_density: float = 0.95,
    offset_range: int = 8,
) -> RleImage:
    w = rng.randint(1, max_w)
    h = rng.randint(1, max_h)
    density = rng.uniform(min_density, max_density)
    grid = np.array([[rng.random() < density for _ in range(w)] for _ in range(h)])
    off = Point(rng.randint(-offset_range, offset_range),
                rng.randint(-offset_range, offset_range))
    return from_raster(grid, off)


def random_se(rng: random.Random, max_side: int = 9) -> RleImage:
    """Non-empty element within max_side x max_side, origin somewhere inside
    the box.  Includes disconnected shapes, single runs and single pixels."""
    while True:
        w = rng.randint(1, max_side)
        h = rng.randint(1, max_side)
        density = rng.uniform(0.15, 1.0)
        grid = np.array([[rng.random() < density for _ in range(w)] for _ in range(h)])
        if grid.any():
            off = Point(-rng.randint(0, w - 1), -rng.randint(0, h - 1))
            return from_raster(grid, off)


def pixel_set(img: RleImage) -> set:
    return img.pixel_set()
