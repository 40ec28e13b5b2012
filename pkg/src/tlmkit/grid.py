"""Periodic grids, grid functions, and unitary Fourier transforms.

Euclidean space is modeled by the torus [0, L)^n sampled on a uniform
lattice of N points per axis (N a power of two).  Frequency-domain
operators act as pointwise multipliers on unitary DFT coefficients, so
Parseval's identity holds exactly and no normalization constant leaks
into computed norms.

The frequency lattice is xi = 2*pi*k/L with integer k per axis; with the
default L = 2*pi the frequencies are the integers themselves.  The FFT
layout labels the Nyquist row -N/2 rather than +N/2; every multiplier in
this package is radial, so the label sign never matters.
"""

from __future__ import annotations

import csv
import struct
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import GridMismatchError, ParameterError

__all__ = [
    "GridSpec",
    "GridFunction",
    "SpectralFunction",
    "forward_transform",
    "inverse_transform",
    "lp_norm",
    "random_bandlimited",
    "refine",
    "read_binary",
    "write_binary",
    "read_csv",
    "write_csv",
]

_HEADER = struct.Struct("<IId")  # dim, points per axis, domain length


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class GridSpec:
    """Uniform periodic lattice on [0, L)^dim.

    Parameters
    ----------
    dim : spatial dimension, 1 to 3.
    points : points per axis N, a power of two, at least 8.
    length : side length L of the periodic box (default 2*pi).
    """

    dim: int
    points: int
    length: float = 2.0 * np.pi

    def __post_init__(self) -> None:
        if self.dim not in (1, 2, 3):
            raise ParameterError(f"dim must be 1, 2 or 3, got {self.dim}")
        if not _is_power_of_two(self.points) or self.points < 8:
            raise ParameterError(
                f"points must be a power of two >= 8, got {self.points}"
            )
        if not (self.length > 0.0 and np.isfinite(self.length)):
            raise ParameterError(f"length must be positive, got {self.length}")

    @property
    def shape(self) -> tuple:
        return (self.points,) * self.dim

    @property
    def size(self) -> int:
        return self.points**self.dim

    @property
    def spacing(self) -> float:
        """Lattice spacing h = L/N."""
        return self.length / self.points

    @property
    def cell_volume(self) -> float:
        return self.spacing**self.dim

    @property
    def nyquist(self) -> float:
        """Largest resolved radial frequency per axis, pi*N/L."""
        return np.pi * self.points / self.length

    @cached_property
    def axis_frequencies(self) -> np.ndarray:
        """1-d array of angular frequencies 2*pi*k/L in FFT layout."""
        return 2.0 * np.pi * np.fft.fftfreq(self.points, d=self.spacing)

    @cached_property
    def frequency_radius(self) -> np.ndarray:
        """|xi| on the full lattice, shape ``self.shape``, FFT layout."""
        axes = np.meshgrid(
            *([self.axis_frequencies] * self.dim), indexing="ij", sparse=True
        )
        rad2 = sum(a**2 for a in axes)
        return np.sqrt(rad2)

    @cached_property
    def coordinates(self) -> list:
        """Per-axis sample coordinates x = i*h as sparse meshgrid arrays."""
        x = np.arange(self.points) * self.spacing
        return np.meshgrid(*([x] * self.dim), indexing="ij", sparse=True)


def _as_field(spec: GridSpec, values: np.ndarray) -> np.ndarray:
    arr = np.asarray(values, dtype=np.complex128)
    if arr.size != spec.size:
        raise ParameterError(
            f"expected {spec.size} samples for {spec.shape}, got {arr.size}"
        )
    arr = arr.reshape(spec.shape)
    if not np.all(np.isfinite(arr)):
        raise ParameterError("samples must be finite")
    return arr


@dataclass(frozen=True)
class GridFunction:
    """Complex-valued samples on a :class:`GridSpec` lattice (row-major).

    ``spectrum`` optionally carries the unitary DFT of the samples.  It is
    set by constructors that build a function *from* its coefficients
    (:func:`random_bandlimited`, :func:`refine`, band projections), where
    the coefficient array is known exactly, zeros included.  Multiplier
    operators read it through :meth:`coeffs`, so a function assembled with
    exactly bounded spectral support keeps exact zeros through the whole
    projection pipeline instead of picking up transform round-off.
    Linear arithmetic propagates the cache when every operand has one.
    """

    spec: GridSpec
    values: np.ndarray
    spectrum: np.ndarray = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _as_field(self.spec, self.values))
        if self.spectrum is not None:
            object.__setattr__(self, "spectrum", _as_field(self.spec, self.spectrum))

    def coeffs(self) -> np.ndarray:
        """Unitary DFT of the samples (the cached spectrum when present)."""
        if self.spectrum is not None:
            return self.spectrum
        return np.fft.fftn(self.values, norm="ortho")

    def modulus(self) -> np.ndarray:
        return np.abs(self.values)

    def is_real(self, tol: float = 1e-12) -> bool:
        scale = float(np.max(np.abs(self.values)))
        if scale == 0.0:
            return True
        return float(np.max(np.abs(self.values.imag))) <= tol * scale

    def __add__(self, other: "GridFunction") -> "GridFunction":
        _check_same_spec(self, other)
        spectrum = None
        if self.spectrum is not None and other.spectrum is not None:
            spectrum = self.spectrum + other.spectrum
        return GridFunction(self.spec, self.values + other.values, spectrum)

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        _check_same_spec(self, other)
        spectrum = None
        if self.spectrum is not None and other.spectrum is not None:
            spectrum = self.spectrum - other.spectrum
        return GridFunction(self.spec, self.values - other.values, spectrum)

    def __mul__(self, scalar: complex) -> "GridFunction":
        spectrum = None if self.spectrum is None else self.spectrum * scalar
        return GridFunction(self.spec, self.values * scalar, spectrum)

    __rmul__ = __mul__


@dataclass(frozen=True)
class SpectralFunction:
    """Unitary DFT coefficients on the frequency lattice (FFT layout)."""

    spec: GridSpec
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _as_field(self.spec, self.coeffs))

    def support_radius(self, rel_tol: float = 1e-13) -> float:
        """Largest |xi| carrying a coefficient above rel_tol * max|coeff|."""
        mag = np.abs(self.coeffs)
        peak = float(mag.max())
        if peak == 0.0:
            return 0.0
        live = mag > rel_tol * peak
        return float(self.spec.frequency_radius[live].max())


def _check_same_spec(a, b) -> None:
    if a.spec != b.spec:
        raise GridMismatchError(f"grid mismatch: {a.spec} vs {b.spec}")


def _reflect_spectrum(arr: np.ndarray) -> np.ndarray:
    """Coefficient array at the mirrored frequencies, k -> -k mod N."""
    idx = tuple((-np.arange(n)) % n for n in arr.shape)
    return arr[np.ix_(*idx)]


def forward_transform(f: GridFunction) -> SpectralFunction:
    """Unitary DFT; physical and spectral l2 norms agree exactly.

    Always transforms the samples, ignoring any cached spectrum: this is
    the independent route used to cross-check spectral bookkeeping.
    """
    return SpectralFunction(f.spec, np.fft.fftn(f.values, norm="ortho"))


def inverse_transform(fh: SpectralFunction) -> GridFunction:
    return GridFunction(fh.spec, np.fft.ifftn(fh.coeffs, norm="ortho"))


def lp_norm(f: GridFunction, p: float) -> float:
    """Discrete L^p norm (sum |f|^p h^n)^(1/p); p = inf gives the sup."""
    a = f.modulus()
    if np.isinf(p):
        return float(a.max())
    if p <= 0:
        raise ParameterError(f"p must be positive, got {p}")
    return float((np.sum(a**p) * f.spec.cell_volume) ** (1.0 / p))


def random_bandlimited(
    spec: GridSpec,
    max_band: int,
    seed: int,
    real_output: bool = True,
) -> GridFunction:
    """Random function with spectrum supported in {|xi| <= 2**max_band}.

    Gaussian white noise is drawn on the lattice (one ``default_rng(seed)``
    stream, the package-wide generator), transformed, masked to the ball of
    radius 2**max_band, and transformed back.  Deterministic in ``seed``.

    Requires 2**(max_band + 1) < pi*N/L so the band sits strictly inside
    the resolved frequencies and the dyadic annulus above it is empty.
    """
    if max_band < 0:
        raise ParameterError(f"max_band must be >= 0, got {max_band}")
    if 2.0 ** (max_band + 1) >= spec.nyquist:
        raise ParameterError(
            f"band 2**{max_band} too wide for grid (need 2**(K+1) < {spec.nyquist:g})"
        )
    rng = np.random.default_rng(seed)
    noise = rng.standard_normal(spec.shape)
    if not real_output:
        noise = noise + 1j * rng.standard_normal(spec.shape)
    coeffs = np.fft.fftn(noise, norm="ortho")
    mask = spec.frequency_radius <= 2.0**max_band * (1.0 + 1e-12)
    coeffs = np.where(mask, coeffs, 0.0)
    out = np.fft.ifftn(coeffs, norm="ortho")
    if real_output:
        out = out.real.astype(np.complex128)
        # taking the real part symmetrizes the spectrum; the mask is
        # reflection-invariant, so the exact support survives
        coeffs = 0.5 * (coeffs + np.conj(_reflect_spectrum(coeffs)))
    return GridFunction(spec, out, spectrum=coeffs)


def refine(f: GridFunction, factor: int) -> GridFunction:
    """Resample onto a grid with ``factor`` times the points per axis.

    Spectral zero-padding: the same trigonometric polynomial evaluated on
    the finer lattice, so physical values at shared points are preserved.
    """
    if factor < 1 or not _is_power_of_two(factor):
        raise ParameterError(f"factor must be a power of two >= 1, got {factor}")
    if factor == 1:
        return f
    spec = f.spec
    fine = GridSpec(spec.dim, spec.points * factor, spec.length)
    coarse = np.fft.fftshift(f.coeffs())
    embedded = np.zeros(fine.shape, dtype=np.complex128)
    start = (fine.points - spec.points) // 2
    sl = tuple(slice(start, start + spec.points) for _ in range(spec.dim))
    embedded[sl] = coarse
    embedded = np.fft.ifftshift(embedded) * np.sqrt(fine.size / spec.size)
    return GridFunction(fine, np.fft.ifftn(embedded, norm="ortho"),
                        spectrum=embedded)


def write_binary(f: GridFunction, path) -> None:
    """16-byte header (dim uint32, N uint32, L float64, little endian)
    followed by interleaved re/im float64 samples in row-major order."""
    flat = f.values.ravel()
    data = np.empty(2 * flat.size, dtype="<f8")
    data[0::2] = flat.real
    data[1::2] = flat.imag
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(f.spec.dim, f.spec.points, f.spec.length))
        fh.write(data.tobytes())


def read_binary(path) -> GridFunction:
    with open(path, "rb") as fh:
        raw = fh.read()
    if len(raw) < _HEADER.size:
        raise ParameterError(f"{path}: truncated header")
    dim, points, length = _HEADER.unpack_from(raw)
    spec = GridSpec(dim, points, length)
    body = np.frombuffer(raw, dtype="<f8", offset=_HEADER.size)
    if body.size != 2 * spec.size:
        raise ParameterError(
            f"{path}: expected {2 * spec.size} float64 payload values, got {body.size}"
        )
    return GridFunction(spec, body[0::2] + 1j * body[1::2])


def write_csv(f: GridFunction, path) -> None:
    """Rows (index, re, im) with a header line; index is row-major."""
    flat = f.values.ravel()
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["index", "re", "im"])
        for i, v in enumerate(flat):
            writer.writerow([i, repr(float(v.real)), repr(float(v.imag))])


def read_csv(path, spec: GridSpec) -> GridFunction:
    values = np.zeros(spec.size, dtype=np.complex128)
    seen = np.zeros(spec.size, dtype=bool)
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0] == "index":
                continue
            i = int(row[0])
            if not 0 <= i < spec.size:
                raise ParameterError(f"{path}: index {i} out of range")
            values[i] = float(row[1]) + 1j * float(row[2])
            seen[i] = True
    if not seen.all():
        raise ParameterError(f"{path}: missing {int((~seen).sum())} samples")
    return GridFunction(spec, values)
