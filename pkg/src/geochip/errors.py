"""Exception hierarchy for the toolkit.

Every error carries a stable ``code`` string (the class name without the
``Error`` suffix) so the CLI can emit machine-readable one-line failures.
"""


class GeochipError(Exception):
    """Base class for all toolkit errors."""

    @property
    def code(self) -> str:
        name = type(self).__name__
        return name[:-5] if name.endswith("Error") else name


class NotTiffError(GeochipError):
    """File does not start with little-endian classic TIFF magic."""


class UnsupportedFeatureError(GeochipError):
    """TIFF feature outside the supported subset (big-endian, BigTIFF, ...)."""


class MissingGeoreferenceError(GeochipError):
    """No geotransform or CRS information in the file."""


class UnsupportedCrsError(GeochipError):
    """EPSG code outside the supported set."""


class CorruptDataError(GeochipError):
    """Inconsistent chunk bookkeeping or undecodable pixel data."""


class IoError(GeochipError):
    """Underlying file I/O failed."""


class InvalidArgumentError(GeochipError):
    """Caller violated an operation precondition."""


class OutOfDomainError(GeochipError):
    """Coordinate outside the projection's valid domain."""


class InvalidMaskError(GeochipError):
    """Multi-band raster declared as a mask."""


class SchemaMismatchError(GeochipError):
    """Operands with incompatible channel schemas."""


class EmptyIntersectionError(GeochipError):
    """Intersection of dataset bounds is empty."""


class NoOverlapError(GeochipError):
    """Query box does not intersect the dataset bounds."""


class ChipTooLargeError(GeochipError):
    """No layer can host a chip of the requested size."""


class ShapeMismatchError(GeochipError):
    """Arrays with inconsistent shapes where homogeneity is required."""


class EmptyBatchError(GeochipError):
    """Batch assembly from an empty sample list."""


class UnknownBandError(GeochipError):
    """Band role absent from the schema."""


class NoValidPixelsError(GeochipError):
    """An operation that needs valid pixels received none."""


class NonBinaryMaskError(GeochipError):
    """Mask contains values other than 0 and 1 on valid pixels."""


class StrideExceedsPatchError(GeochipError):
    """Inference stride larger than the patch size."""
