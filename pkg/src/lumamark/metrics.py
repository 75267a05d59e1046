"""Imperceptibility (PSNR over Y) and extraction fidelity (similarity sigma)."""

import math
from dataclasses import dataclass

import numpy as np

from .colorspace import rgb_to_ycbcr
from .errors import DimensionMismatch
from .pixmap import RgbImage, WatermarkBitmap, WATERMARK_BITS


@dataclass(frozen=True)
class MetricsReport:
    psnr_db: float  # math.inf when the images are identical
    sigma: float
    matched: bool

    def __post_init__(self):
        if not 0.0 <= self.sigma <= 1.0:
            raise ValueError("sigma must lie in [0, 1]")
        if self.matched != decide(self.sigma):
            raise ValueError("matched must equal (sigma > 0.5)")

    @classmethod
    def from_measurements(cls, psnr_db: float, sigma: float) -> "MetricsReport":
        return cls(psnr_db=psnr_db, sigma=sigma, matched=decide(sigma))


def psnr(reference: RgbImage, test: RgbImage) -> float:
    """Peak signal-to-noise ratio in dB between the two images' Y planes.

    10*log10(255^2 * N / sum((Y_ref - Y_test)^2)); +inf when the planes match.
    """
    if (reference.width, reference.height) != (test.width, test.height):
        raise DimensionMismatch(
            f"reference is {reference.width}x{reference.height}, "
            f"test is {test.width}x{test.height}"
        )
    y_ref = rgb_to_ycbcr(reference).y
    y_test = rgb_to_ycbcr(test).y
    ssd = float(((y_ref - y_test) ** 2).sum())
    if ssd == 0.0:
        return math.inf
    n = reference.width * reference.height
    return 10.0 * math.log10(255.0**2 * n / ssd)


def similarity(reference: WatermarkBitmap, extracted: WatermarkBitmap) -> float:
    """Fraction of the 1024 bit positions on which the two bitmaps agree."""
    agree = int((reference.bits == extracted.bits).sum())
    return agree / WATERMARK_BITS


def decide(sigma: float) -> bool:
    """True iff sigma falls in (0.5, 1.0]: the extracted watermark matches."""
    if not 0.0 <= sigma <= 1.0:
        raise ValueError("sigma must lie in [0, 1]")
    return sigma > 0.5


def evaluate(
    reference_img: RgbImage,
    test_img: RgbImage,
    reference_wm: WatermarkBitmap,
    extracted_wm: WatermarkBitmap,
) -> MetricsReport:
    """Bundle PSNR and similarity for one (image, watermark) comparison."""
    s = similarity(reference_wm, extracted_wm)
    return MetricsReport.from_measurements(psnr(reference_img, test_img), s)
