"""Shared builders and independent oracles for the test suite.

The oracles deliberately avoid the library's own code paths: the spiral
oracle walks the lattice with a visited-set turning rule instead of run
lengths, and the candidate oracle recomputes every log-average with plain
math over Python loops.
"""

import math

import numpy as np

from lumamark.colorspace import YcbcrImage
from lumamark.pixmap import RgbImage, WatermarkBitmap
from lumamark.selection import TIE_TOLERANCE


def gray_image(value: int, width: int = 512, height: int = 512) -> RgbImage:
    return RgbImage(np.full((height, width, 3), value, dtype=np.uint8))


def ycc_from_y(y_plane: np.ndarray) -> YcbcrImage:
    y = np.asarray(y_plane, dtype=np.float64)
    return YcbcrImage(y, np.zeros_like(y), np.zeros_like(y))


def random_image(rng: np.random.Generator, width: int, height: int) -> RgbImage:
    return RgbImage(rng.integers(0, 256, size=(height, width, 3), dtype=np.uint8))


def random_bitmap(rng: np.random.Generator) -> WatermarkBitmap:
    return WatermarkBitmap((rng.random((32, 32)) < 0.5).astype(np.uint8))


def checkerboard_bitmap() -> WatermarkBitmap:
    yy, xx = np.mgrid[0:32, 0:32]
    return WatermarkBitmap(((yy + xx) % 2).astype(np.uint8))


def spiral_oracle(grid_cols: int, grid_rows: int) -> list[tuple[int, int]]:
    """Independent center-out spiral: visited-set turning rule on the lattice.

    Start at (cols//2, rows//2) facing right; after every step, turn to the
    next clockwise direction whenever the lattice cell there is unvisited.
    Emits (col, row) for in-grid cells only, until the grid is covered.
    """
    total = grid_cols * grid_rows
    col, row = grid_cols // 2, grid_rows // 2
    visited = {(col, row)}
    emitted = [(col, row)]
    directions = [(1, 0), (0, 1), (-1, 0), (0, -1)]  # right, down, left, up
    facing = 0
    while len(emitted) < total:
        dc, dr = directions[facing]
        col, row = col + dc, row + dr
        visited.add((col, row))
        if 0 <= col < grid_cols and 0 <= row < grid_rows:
            emitted.append((col, row))
        turn = (facing + 1) % 4
        tc, tr = directions[turn]
        if (col + tc, row + tr) not in visited:
            facing = turn
    return emitted


def log_mean_oracle(values, delta: float) -> float:
    """Plain-math mean of log(delta + v) over a flat iterable."""
    flat = [float(v) for v in np.asarray(values).reshape(-1)]
    return sum(math.log(delta + v) for v in flat) / len(flat)


def log_avg_oracle(values, delta: float) -> float:
    """Plain-math log-average luminance over a flat iterable."""
    return math.exp(log_mean_oracle(values, delta))


def candidate_oracle(y: np.ndarray, delta: float) -> set[tuple[int, int]]:
    """Brute-force candidate set: per-block and whole-image log statistics
    recomputed independently (ties use the library's published tolerance);
    returns {(col, row)}."""
    height, width = y.shape
    image_mean = log_mean_oracle(y, delta)
    out = set()
    for row in range(height // 8):
        for col in range(width // 8):
            block = y[row * 8 : row * 8 + 8, col * 8 : col * 8 + 8]
            if log_mean_oracle(block, delta) >= image_mean - TIE_TOLERANCE:
                out.add((col, row))
    return out
