"""Embed a 32x32 watermark into selected-block luminance; extract by sign test.

Bit-to-pixel mapping, shared by both directions: watermark bit i (row-major
over the 32x32 bitmap) lands in block plan.blocks[i // 64], at row-major
position i % 64 inside that 8x8 block. White bits add alpha to the pixel's
Y value, black bits subtract it. Extraction is non-blind: it recomputes the
plan from the original image's Y plane and reads the sign of Y_w - Y, where
a difference of exactly zero decodes as white.
"""

import warnings
from dataclasses import dataclass

import numpy as np

from .colorspace import YcbcrImage, rgb_to_ycbcr, ycbcr_to_rgb
from .errors import DimensionMismatch
from .pixmap import RgbImage, WatermarkBitmap
from .selection import (
    BLOCK_SIZE,
    DEFAULT_DELTA,
    SelectionPlan,
    partition_grid,
    select_blocks,
)

DEFAULT_ALPHA = 3


@dataclass(frozen=True)
class EmbedParams:
    alpha: int = DEFAULT_ALPHA
    delta: float = DEFAULT_DELTA

    def __post_init__(self):
        if self.alpha < 1:
            raise ValueError("alpha must be >= 1 (0 would make the sign test vacuous)")
        if self.alpha < 2:
            warnings.warn(
                "alpha=1 leaves no headroom for reconstruction rounding",
                stacklevel=2,
            )


def embedded_pixel_coords(plan: SelectionPlan) -> tuple[np.ndarray, np.ndarray]:
    """(ys, xs) of the 1024 carrier pixels, in watermark bit order."""
    i = np.arange(32 * 32)
    block_idx = i // (BLOCK_SIZE * BLOCK_SIZE)
    within = i % (BLOCK_SIZE * BLOCK_SIZE)
    cols = np.array([b.col for b in plan.blocks])
    rows = np.array([b.row for b in plan.blocks])
    ys = rows[block_idx] * BLOCK_SIZE + within // BLOCK_SIZE
    xs = cols[block_idx] * BLOCK_SIZE + within % BLOCK_SIZE
    return ys, xs


def _check_plan_fits(plan: SelectionPlan, width: int, height: int) -> None:
    if (plan.grid_cols, plan.grid_rows) != partition_grid(width, height):
        raise DimensionMismatch(
            f"plan grid {plan.grid_cols}x{plan.grid_rows} does not match "
            f"a {width}x{height} image"
        )


def apply_watermark_to_y(
    y: np.ndarray, plan: SelectionPlan, watermark: WatermarkBitmap, alpha: int
) -> np.ndarray:
    """Return a copy of the Y plane with +alpha/-alpha applied per bit."""
    ys, xs = embedded_pixel_coords(plan)
    out = y.copy()
    signs = np.where(watermark.bits.reshape(-1) == 1, 1.0, -1.0)
    out[ys, xs] += alpha * signs
    return out


def embed(
    original: RgbImage,
    watermark: WatermarkBitmap,
    params: EmbedParams = EmbedParams(),
    plan: SelectionPlan | None = None,
) -> RgbImage:
    """Embed the watermark and reconstruct 8-bit RGB.

    Chroma planes and all pixels outside the plan's 16 blocks pass through
    untouched; only reconstruction rounding/clamping stands between the
    modified Y plane and the output bytes.
    """
    ycc = rgb_to_ycbcr(original)
    if plan is None:
        plan = select_blocks(ycc, params.delta)
    else:
        _check_plan_fits(plan, original.width, original.height)
    y = apply_watermark_to_y(ycc.y, plan, watermark, params.alpha)
    return ycbcr_to_rgb(YcbcrImage(y, ycc.cb, ycc.cr))


def extract(
    original: RgbImage,
    watermarked: RgbImage,
    params: EmbedParams = EmbedParams(),
    plan: SelectionPlan | None = None,
) -> WatermarkBitmap:
    """Recover the watermark by comparing carrier-pixel luminance signs."""
    if (original.width, original.height) != (watermarked.width, watermarked.height):
        raise DimensionMismatch(
            f"original is {original.width}x{original.height}, "
            f"watermarked is {watermarked.width}x{watermarked.height}"
        )
    ycc_orig = rgb_to_ycbcr(original)
    ycc_marked = rgb_to_ycbcr(watermarked)
    if plan is None:
        plan = select_blocks(ycc_orig, params.delta)
    else:
        _check_plan_fits(plan, original.width, original.height)
    ys, xs = embedded_pixel_coords(plan)
    diff = ycc_marked.y[ys, xs] - ycc_orig.y[ys, xs]
    bits = (diff >= 0).astype(np.uint8).reshape(32, 32)
    return WatermarkBitmap(bits)
