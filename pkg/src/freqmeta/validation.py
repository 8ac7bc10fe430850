"""Input validation helpers used by the estimators and core functions."""

import numpy as np

from .errors import InvalidImageError, ShapeError


def check_image(image, name="image"):
    """Validate a single H×W or H×W×C image and return it as float64.

    Raises InvalidImageError for non-finite pixels, ShapeError for
    unsupported layouts.
    """
    arr = np.asarray(image, dtype=np.float64)
    if arr.ndim not in (2, 3):
        raise ShapeError(f"{name} must be H×W or H×W×C, got ndim={arr.ndim}")
    if arr.ndim == 3 and arr.shape[2] < 1:
        raise ShapeError(f"{name} has zero channels: shape={arr.shape}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ShapeError(f"{name} has empty spatial dims: shape={arr.shape}")
    if not np.isfinite(arr).all():
        raise InvalidImageError(f"{name} contains non-finite pixel values")
    return arr


def check_image_batch(X, name="X"):
    """Validate a batch of images shaped (N, H, W) or (N, H, W, C)."""
    arr = np.asarray(X, dtype=np.float64)
    if arr.ndim not in (3, 4):
        raise ShapeError(
            f"{name} must be (N, H, W) or (N, H, W, C), got ndim={arr.ndim}"
        )
    if arr.shape[0] < 1:
        raise ShapeError(f"{name} is empty")
    if not np.isfinite(arr).all():
        raise InvalidImageError(f"{name} contains non-finite pixel values")
    return arr


def check_labels(y, n_samples, name="y"):
    """Validate an integer label vector aligned with a batch."""
    arr = np.asarray(y)
    if arr.ndim != 1 or arr.shape[0] != n_samples:
        raise ShapeError(
            f"{name} must be a length-{n_samples} label vector, got shape {arr.shape}"
        )
    if not np.issubdtype(arr.dtype, np.integer):
        rounded = np.round(arr)
        if not np.allclose(arr, rounded):
            raise ShapeError(f"{name} must contain integer class labels")
        arr = rounded.astype(np.int64)
    return arr.astype(np.int64)


def check_rng(rng):
    """Coerce an int seed or numpy Generator into a Generator."""
    if isinstance(rng, np.random.Generator):
        return rng
    if rng is None or isinstance(rng, (int, np.integer)):
        return np.random.default_rng(rng)
    raise TypeError(f"expected int seed or numpy Generator, got {type(rng)!r}")


def check_simplex(p, name="scores", tol=1e-6):
    """Validate a probability vector: non-negative, sums to 1 within tol."""
    arr = np.asarray(p, dtype=np.float64)
    if arr.ndim != 1:
        raise ShapeError(f"{name} must be a 1-D probability vector")
    if (arr < -tol).any():
        raise ValueError(f"{name} has negative entries")
    if abs(arr.sum() - 1.0) > tol:
        raise ValueError(f"{name} sums to {arr.sum()!r}, expected 1 within {tol}")
    return arr
