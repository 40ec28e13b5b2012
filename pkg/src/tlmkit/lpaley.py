"""Dyadic Littlewood-Paley multiplier families on the frequency lattice.

A radial profile g pinched between the indicators of the balls of radius
2 and 3 generates the family

    phi_0(xi) = g(|xi|),    phi_j(xi) = g(2**-j |xi|) - g(2**-j+1 |xi|),

which telescopes: sum_{j<=J} phi_j = g(2**-J |xi|), identically 1 on
{|xi| <= 2**(J+1)}.  The square-root flavor takes square roots of the
same differences so that the *squares* telescope, giving the partition
sum phi_j**2 = 1 used by the self-adjoint reconstruction sum
phi_j(D) phi_j(D).

phi_j is supported in the annulus {2**j <= |xi| <= 3 * 2**j}; families two
or more bands apart have disjoint supports (3 * 2**j < 2**(j+2)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .grid import GridFunction, GridSpec, _check_same_spec

__all__ = [
    "BumpProfile",
    "LPFamily",
    "smooth_step",
    "build_family",
    "project",
    "project_all",
    "partition_residual",
    "reconstruct",
]

FLAVORS = ("plain", "square_root")


def smooth_step(t, sharpness: float = 1.0) -> np.ndarray:
    """C-infinity step: exactly 1 for t <= 2, exactly 0 for t >= 3.

    Built from eta(u) = exp(-sharpness/u) (u > 0, else 0) as
    g = eta(3-t) / (eta(3-t) + eta(t-2)).  Any sharpness > 0 yields an
    admissible profile; the default 1 is the reference profile.
    """
    if sharpness <= 0:
        raise ParameterError(f"sharpness must be positive, got {sharpness}")
    t = np.asarray(t, dtype=np.float64)
    out = np.zeros(t.shape)
    out[t <= 2.0] = 1.0
    mid = (t > 2.0) & (t < 3.0)
    if np.any(mid):
        tm = t[mid]
        up = np.exp(-sharpness / (3.0 - tm))
        down = np.exp(-sharpness / (tm - 2.0))
        out[mid] = up / (up + down)
    return out


@dataclass(frozen=True)
class BumpProfile:
    """Scalar profile generating a dyadic family.

    flavor "plain": the multipliers themselves sum to 1.
    flavor "square_root": the *squares* of the multipliers sum to 1
    (profile g**(1/2), still pinched between the two indicators after
    squaring).
    """

    flavor: str = "plain"
    sharpness: float = 1.0

    def __post_init__(self) -> None:
        if self.flavor not in FLAVORS:
            raise ParameterError(f"flavor must be one of {FLAVORS}, got {self.flavor!r}")
        if not (self.sharpness > 0 and np.isfinite(self.sharpness)):
            raise ParameterError(f"sharpness must be positive, got {self.sharpness}")

    def step(self, t) -> np.ndarray:
        """The underlying monotone step g (before any square root)."""
        return smooth_step(t, self.sharpness)


@dataclass(frozen=True)
class LPFamily:
    """Multipliers phi_0 .. phi_{j_max} sampled on a grid's frequency lattice."""

    spec: GridSpec
    profile: BumpProfile
    j_max: int
    multipliers: tuple

    @property
    def squared(self) -> bool:
        return self.profile.flavor == "square_root"


def build_family(
    spec: GridSpec,
    j_max: int,
    flavor: str = "plain",
    sharpness: float = 1.0,
) -> LPFamily:
    """Sample the dyadic family on the lattice; needs 2**(j_max+1) <= Nyquist."""
    if j_max < 1:
        raise ParameterError(f"j_max must be >= 1, got {j_max}")
    if 2.0 ** (j_max + 1) > spec.nyquist * (1.0 + 1e-12):
        raise ParameterError(
            f"2**(j_max+1) = {2**(j_max + 1)} exceeds grid Nyquist {spec.nyquist:g}"
        )
    profile = BumpProfile(flavor, sharpness)
    rad = spec.frequency_radius
    steps = [profile.step(rad / 2.0**j) for j in range(j_max + 1)]
    mults = []
    for j in range(j_max + 1):
        if j == 0:
            band = steps[0]
        else:
            band = steps[j] - steps[j - 1]
        if profile.flavor == "square_root":
            band = np.sqrt(np.clip(band, 0.0, None))
        mults.append(band)
    return LPFamily(spec, profile, j_max, tuple(mults))


def _apply_multiplier(spec, mult: np.ndarray, coeffs: np.ndarray) -> GridFunction:
    banded = mult * coeffs
    return GridFunction(spec, np.fft.ifftn(banded, norm="ortho"), spectrum=banded)


def project(family: LPFamily, j: int, f: GridFunction) -> GridFunction:
    """Frequency projection phi_j(D) f via the unitary DFT.

    Reads the function's cached spectrum when it has one, so projections
    of exactly band-limited inputs onto disjoint bands are exactly zero.
    """
    if not 0 <= j <= family.j_max:
        raise ParameterError(f"band index {j} outside 0..{family.j_max}")
    _check_same_spec(family, f)
    return _apply_multiplier(f.spec, family.multipliers[j], f.coeffs())


def project_all(family: LPFamily, f: GridFunction) -> list:
    """All blocks [phi_0(D)f, ..., phi_{j_max}(D)f] with one forward DFT."""
    _check_same_spec(family, f)
    coeffs = f.coeffs()
    return [_apply_multiplier(f.spec, m, coeffs) for m in family.multipliers]


def partition_residual(family: LPFamily) -> float:
    """max |sum - 1| over lattice frequencies |xi| <= 2**(j_max+1).

    "sum" is the plain sum for the plain flavor and the sum of squares for
    the square-root flavor; both telescope to exactly 1 on the region.
    """
    if family.squared:
        total = sum(m**2 for m in family.multipliers)
    else:
        total = sum(family.multipliers)
    region = family.spec.frequency_radius <= 2.0 ** (family.j_max + 1) * (1 + 1e-12)
    return float(np.max(np.abs(total[region] - 1.0)))


def reconstruct(family: LPFamily, f: GridFunction, n_terms: int) -> GridFunction:
    """Partial reconstruction through band n_terms (inclusive).

    Plain flavor: sum_{j<=n} phi_j(D) f.  Square-root flavor: the
    self-adjoint form sum_{j<=n} phi_j(D) phi_j(D) f.  Either way a single
    multiplier is applied, so one DFT round trip.

    For the plain flavor the partial sum telescopes in closed form to
    g(2**-n |xi|); evaluating the profile directly (instead of summing the
    stored differences) keeps that multiplier exactly 1 across the covered
    ball, so partial sums reproduce band-limited inputs without round-off.
    """
    if not 0 <= n_terms <= family.j_max:
        raise ParameterError(f"n_terms {n_terms} outside 0..{family.j_max}")
    _check_same_spec(family, f)
    if family.squared:
        total = sum(m**2 for m in family.multipliers[: n_terms + 1])
    else:
        total = family.profile.step(family.spec.frequency_radius / 2.0**n_terms)
    return _apply_multiplier(f.spec, total, f.coeffs())
