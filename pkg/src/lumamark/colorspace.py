"""RGB <-> YCbCr conversion for the embedding pipeline.

The transform pair is YIQ-style: Y carries luminance with weights
(0.299, 0.587, 0.114) and the two chroma planes are zero on gray pixels.
Forward conversion keeps full real precision (no rounding, no clamping);
only the reconstruction back to 8-bit RGB quantizes. The pair is close
enough to mutually inverse that reconstruction of an unmodified image
reproduces every 8-bit triple exactly (worst-case pre-rounding error is
about 0.14 of a quantization step; see the colorspace regression tests).
"""

import numpy as np

from .errors import DimensionMismatch
from .pixmap import RgbImage

RGB_TO_YCC = np.array(
    [
        [0.299, 0.587, 0.114],
        [0.596, -0.275, -0.321],
        [0.212, -0.523, 0.311],
    ]
)

YCC_TO_RGB = np.array(
    [
        [1.0, 0.956, 0.620],
        [1.0, -0.272, -0.647],
        [1.0, -1.108, 1.705],
    ]
)


class YcbcrImage:
    """Real-valued Y/Cb/Cr planes; Y is nominally [0, 255] but never clamped."""

    def __init__(self, y: np.ndarray, cb: np.ndarray, cr: np.ndarray):
        planes = []
        for plane in (y, cb, cr):
            arr = np.asarray(plane, dtype=np.float64)
            if arr.ndim != 2:
                raise ValueError(f"plane must be 2-D, got shape {arr.shape}")
            arr = arr.copy()
            arr.flags.writeable = False
            planes.append(arr)
        if not (planes[0].shape == planes[1].shape == planes[2].shape):
            raise DimensionMismatch("Y/Cb/Cr planes differ in shape")
        self._y, self._cb, self._cr = planes

    @property
    def y(self) -> np.ndarray:
        return self._y

    @property
    def cb(self) -> np.ndarray:
        return self._cb

    @property
    def cr(self) -> np.ndarray:
        return self._cr

    @property
    def width(self) -> int:
        return self._y.shape[1]

    @property
    def height(self) -> int:
        return self._y.shape[0]

    def __repr__(self) -> str:
        return f"YcbcrImage({self.width}x{self.height})"


def round_half_away(x: np.ndarray) -> np.ndarray:
    """Round to nearest integer, halves away from zero (deterministic everywhere)."""
    return np.trunc(x + np.copysign(0.5, x))


def rgb_to_ycbcr(img: RgbImage) -> YcbcrImage:
    """Apply the forward matrix per pixel in full real precision."""
    rgb = img.pixels.astype(np.float64)
    ycc = rgb @ RGB_TO_YCC.T
    return YcbcrImage(ycc[:, :, 0], ycc[:, :, 1], ycc[:, :, 2])


def ycbcr_to_rgb(img: YcbcrImage) -> RgbImage:
    """Apply the inverse matrix, round halves away from zero, clamp to [0, 255]."""
    ycc = np.stack((img.y, img.cb, img.cr), axis=-1)
    rgb = ycc @ YCC_TO_RGB.T
    rgb = np.clip(round_half_away(rgb), 0, 255)
    return RgbImage(rgb.astype(np.uint8))


def roundtrip_error(img: RgbImage) -> tuple[int, int, int]:
    """Per-channel max absolute error of ycbcr_to_rgb(rgb_to_ycbcr(img))."""
    restored = ycbcr_to_rgb(rgb_to_ycbcr(img))
    diff = np.abs(
        img.pixels.astype(np.int16) - restored.pixels.astype(np.int16)
    ).reshape(-1, 3)
    r, g, b = diff.max(axis=0)
    return int(r), int(g), int(b)
