"""Exception types shared across the package."""


class FreqMetaError(Exception):
    """Base class for errors raised by this package."""


class InvalidImageError(FreqMetaError, ValueError):
    """Image contains non-finite values or has an unusable layout."""


class ShapeError(FreqMetaError, ValueError):
    """Array dimensions do not match what an operation requires."""


class RangeError(FreqMetaError, ValueError):
    """A scalar parameter lies outside its valid range."""


class SymmetryError(FreqMetaError, ValueError):
    """A spectrum violates conjugate symmetry beyond tolerance."""


class IngestionError(FreqMetaError, ValueError):
    """A dataset directory or file cannot be loaded."""


class SamplingError(FreqMetaError, ValueError):
    """An episode cannot be sampled from the given dataset."""


class EpisodeShapeError(FreqMetaError, ValueError):
    """Per-class counts or label layout disagree with the episode shape."""


class DegenerateTaskError(FreqMetaError, ValueError):
    """A task head cannot be fit (e.g. single-class support set)."""


class ConfigError(FreqMetaError, ValueError):
    """A run configuration is malformed; the message names the key."""


class CheckpointError(FreqMetaError, ValueError):
    """A checkpoint is missing, corrupt, or architecturally incompatible."""


class DivergenceError(FreqMetaError, RuntimeError):
    """Training produced a non-finite or exploding loss."""
