"""Exception types raised by the watermarking toolkit."""


class LumamarkError(Exception):
    """Base class for all toolkit errors."""


class MalformedHeader(LumamarkError):
    """PNM file has a bad magic number, dimensions, maxval, or stray payload."""


class TruncatedPayload(LumamarkError):
    """PNM payload holds fewer bytes than the header promises."""


class WrongDimensions(LumamarkError):
    """Watermark bitmap file is not 32x32."""


class EmptyRegion(LumamarkError):
    """A luminance statistic was requested over zero samples."""


class ImageTooSmall(LumamarkError):
    """Image does not admit even a single 8x8 block."""


class InsufficientCandidates(LumamarkError):
    """Fewer than 16 blocks reach the whole-image log-average luminance."""


class DimensionMismatch(LumamarkError):
    """Two images (or planes) that must agree in size do not."""


class RectOutOfBounds(LumamarkError):
    """Crop rectangle is empty or falls outside the image."""
