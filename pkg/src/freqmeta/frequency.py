"""Frequency-domain image decomposition.

Splits an image into a low-frequency content component and a
high-frequency structure component that sum back to the original image.
Two routes are provided: an FFT route (binary DC-centered masks applied
in the spectrum) and a Haar-wavelet route (coarse approximation band plus
residual). Both honour the same contract: ``low + high == image`` to
within floating-point round-off, and both components are real-valued.

Conventions: the forward transform is unnormalized and the inverse
divides by H*W (numpy's default), spectra are stored DC-centered with the
DC bin at ``(H//2, W//2)``, and masks are binary and point-symmetric
about DC so that masked inverse transforms of real images stay real.
"""

from dataclasses import dataclass

import numpy as np

from .errors import RangeError, ShapeError, SymmetryError
from .validation import check_image

IMAG_TOL = 1e-6  # max |imag| tolerated when casting an inverse transform to real


def _as_channels(image):
    """View a validated image as H×W×C (C=1 for grayscale) plus a 2-D flag."""
    was_2d = image.ndim == 2
    if was_2d:
        image = image[:, :, None]
    return image, was_2d


@dataclass
class Spectrum:
    """DC-centered complex spectrum of one image.

    ``coefficients`` has the source image's spatial dims (H, W, C); the DC
    bin sits at ``(H//2, W//2)``. For real source images the spectrum is
    conjugate-symmetric, so the inverse transform is real up to round-off.
    """

    coefficients: np.ndarray
    squeeze_channel: bool = False

    @property
    def shape(self):
        return self.coefficients.shape[:2]

    def dc(self):
        """The DC coefficient(s), one per channel."""
        h, w = self.shape
        return self.coefficients[h // 2, w // 2]


@dataclass
class FrequencyMask:
    """Binary DC-centered pass mask over an H×W spectrum grid.

    ``weights`` holds 0/1 floats; a bin is passed iff its normalized
    distance from DC is <= ``cutoff``. ``shape`` selects the distance:
    Euclidean ("circular") or Chebyshev ("square"), both scaled so the
    farthest bin of the grid sits at distance exactly 1.
    """

    weights: np.ndarray
    cutoff: float
    shape: str

    def complement(self):
        return FrequencyMask(1.0 - self.weights, self.cutoff, self.shape)


@dataclass
class FrequencyPair:
    """Complementary (low, high) components of one image.

    Invariant: ``low + high`` reconstructs the source to within 1e-5 per
    pixel. High-frequency pixels are signed and are intentionally not
    re-normalized into [0, 1].
    """

    low: np.ndarray
    high: np.ndarray
    method: str
    params: dict


def fft2(image):
    """Forward 2-D DFT of each channel, returned DC-centered.

    Unnormalized convention: a constant image of value v on an H×W grid
    has DC coefficient H*W*v.
    """
    arr = check_image(image)
    arr, was_2d = _as_channels(arr)
    coeff = np.fft.fftshift(np.fft.fft2(arr, axes=(0, 1)), axes=(0, 1))
    return Spectrum(coeff, squeeze_channel=was_2d)


def ifft2(spectrum, imag_tol=IMAG_TOL):
    """Inverse of :func:`fft2`; divides by H*W.

    The result must be real: if the largest imaginary residue exceeds
    ``imag_tol`` the spectrum is not conjugate-symmetric and a
    SymmetryError is raised instead of silently discarding the residue.
    """
    coeff = np.asarray(spectrum.coefficients)
    if coeff.ndim == 2:
        coeff = coeff[:, :, None]
    if coeff.shape[0] < 1 or coeff.shape[1] < 1:
        raise ShapeError(f"spectrum has empty spatial dims: {coeff.shape}")
    out = np.fft.ifft2(np.fft.ifftshift(coeff, axes=(0, 1)), axes=(0, 1))
    residue = float(np.abs(out.imag).max())
    if residue >= imag_tol:
        raise SymmetryError(
            f"imaginary residue {residue:.3e} exceeds {imag_tol:.1e}; "
            "spectrum is not conjugate-symmetric"
        )
    real = out.real
    if getattr(spectrum, "squeeze_channel", False):
        real = real[:, :, 0]
    return real


def _normalized_distance(height, width, shape):
    """Per-bin distance from DC, scaled so the farthest bin is at 1."""
    cy, cx = height // 2, width // 2
    dv = (np.arange(height) - cy) / max(1, height // 2)
    du = (np.arange(width) - cx) / max(1, width // 2)
    dv, du = np.meshgrid(dv, du, indexing="ij")
    if shape == "circular":
        dist = np.sqrt(dv**2 + du**2)
    elif shape == "square":
        dist = np.maximum(np.abs(dv), np.abs(du))
    else:
        raise RangeError(f"unknown mask shape {shape!r}; use 'circular' or 'square'")
    peak = dist.max()
    if peak > 0:
        dist = dist / peak
    return dist


def make_mask(height, width, cutoff, shape="circular"):
    """Binary low-pass mask over a DC-centered H×W grid.

    A bin passes iff its normalized distance from DC is <= cutoff, so
    cutoff=0 keeps only the DC bin and cutoff=1 keeps everything. The
    mask is point-symmetric about DC, which keeps masked inverse
    transforms of real images real.
    """
    if height < 1 or width < 1:
        raise ShapeError(f"mask dims must be >= 1, got {height}x{width}")
    if not 0.0 <= cutoff <= 1.0:
        raise RangeError(f"cutoff must lie in [0, 1], got {cutoff}")
    dist = _normalized_distance(height, width, shape)
    weights = (dist <= cutoff).astype(np.float64)
    return FrequencyMask(weights, float(cutoff), shape)


def decompose(image, mask):
    """Split an image into complementary low/high components via the FFT.

    low = inverse(M * F(x)), high = inverse((1-M) * F(x)); by linearity
    low + high == x up to transform round-off.
    """
    arr = check_image(image)
    spec = fft2(arr)
    h, w = spec.shape
    if mask.weights.shape != (h, w):
        raise ShapeError(
            f"mask shape {mask.weights.shape} does not match image {(h, w)}"
        )
    m = mask.weights[:, :, None]
    low = ifft2(Spectrum(spec.coefficients * m, spec.squeeze_channel))
    high = ifft2(Spectrum(spec.coefficients * (1.0 - m), spec.squeeze_channel))
    return FrequencyPair(
        low, high, method="fft", params={"cutoff": mask.cutoff, "shape": mask.shape}
    )


def _haar_analysis(plane):
    """One Haar analysis level on an even-sided 2-D plane -> (LL, (LH, HL, HH))."""
    a = plane[0::2, 0::2]
    b = plane[0::2, 1::2]
    c = plane[1::2, 0::2]
    d = plane[1::2, 1::2]
    ll = (a + b + c + d) / 2.0
    lh = (a - b + c - d) / 2.0
    hl = (a + b - c - d) / 2.0
    hh = (a - b - c + d) / 2.0
    return ll, (lh, hl, hh)


def _haar_synthesis(ll, details):
    """Inverse of one Haar analysis level."""
    lh, hl, hh = details
    a = (ll + lh + hl + hh) / 2.0
    b = (ll - lh + hl - hh) / 2.0
    c = (ll + lh - hl - hh) / 2.0
    d = (ll - lh - hl + hh) / 2.0
    out = np.empty((ll.shape[0] * 2, ll.shape[1] * 2), dtype=ll.dtype)
    out[0::2, 0::2] = a
    out[0::2, 1::2] = b
    out[1::2, 0::2] = c
    out[1::2, 1::2] = d
    return out


def _pad_to_multiple(plane, multiple):
    """Right/bottom edge-replication pad so both sides divide ``multiple``."""
    h, w = plane.shape
    ph = (-h) % multiple
    pw = (-w) % multiple
    if ph == 0 and pw == 0:
        return plane
    return np.pad(plane, ((0, ph), (0, pw)), mode="edge")


def haar_decompose(image, levels=1):
    """Wavelet variant of :func:`decompose`.

    The low component is the synthesis of the level-``levels`` Haar
    approximation band with all detail bands zeroed; the high component
    is the residual ``image - low``, so complementarity holds exactly.
    Sides that do not divide 2**levels are edge-padded, transformed, and
    cropped back.
    """
    arr = check_image(image)
    arr, was_2d = _as_channels(arr)
    h, w = arr.shape[:2]
    if levels < 1:
        raise RangeError(f"levels must be >= 1, got {levels}")
    if 2**levels > max(h, w):
        raise RangeError(
            f"levels={levels} exceeds feasible depth for a {h}x{w} image"
        )
    low = np.empty_like(arr)
    block = 2**levels
    for ch in range(arr.shape[2]):
        plane = _pad_to_multiple(arr[:, :, ch], block)
        stack = []
        ll = plane
        for _ in range(levels):
            ll, details = _haar_analysis(ll)
            stack.append(details)
        for details in reversed(stack):
            zeros = tuple(np.zeros_like(band) for band in details)
            ll = _haar_synthesis(ll, zeros)
        low[:, :, ch] = ll[:h, :w]
    high = arr - low
    if was_2d:
        low, high = low[:, :, 0], high[:, :, 0]
    return FrequencyPair(low, high, method="haar", params={"levels": int(levels)})


def decompose_image(image, method="fft", cutoff=0.15, mask_shape="circular", levels=1):
    """Dispatch helper: decompose with either route using scalar params."""
    if method == "fft":
        arr = check_image(image)
        mask = make_mask(arr.shape[0], arr.shape[1], cutoff, mask_shape)
        return decompose(arr, mask)
    if method == "haar":
        return haar_decompose(image, levels)
    raise RangeError(f"unknown decomposition method {method!r}; use 'fft' or 'haar'")
