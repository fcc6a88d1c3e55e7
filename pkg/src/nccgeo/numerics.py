"""Dense matrix substrate: eigenvalues, matrix exponential, invertibility.

Everything downstream works on small dense matrices (dimension a few
dozen at most), so robustness beats speed throughout.  The heavy lifting
is delegated to LAPACK through numpy/scipy; this module owns the
validation and the tolerance story.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DimensionError, NumericError

__all__ = [
    "Tolerances",
    "DEFAULT_TOLS",
    "as_matrix",
    "eigenvalues",
    "expm",
    "is_invertible",
    "snap_spectrum",
    "spectral_radius",
    "rng_from_seed",
]


@dataclass(frozen=True)
class Tolerances:
    """Tolerance bundle used by every membership and classification test.

    eq_tol        -- "equals zero" threshold for residuals
    spec_tol      -- eigenvalue classification threshold
    boundary_band -- half-width of the indeterminate shell around open
                     cone/ball/wedge boundaries
    """

    eq_tol: float = 1e-9
    spec_tol: float = 1e-7
    boundary_band: float = 1e-6

    def __post_init__(self):
        if not (0.0 < self.eq_tol <= self.spec_tol <= self.boundary_band < 1.0):
            raise ValueError(
                "tolerances must satisfy 0 < eq_tol <= spec_tol <= "
                f"boundary_band < 1, got {self}"
            )


DEFAULT_TOLS = Tolerances()


def as_matrix(data, square: bool = False, allow_complex: bool = False) -> np.ndarray:
    """Validate and return a 2-D array with finite entries.

    Raises DimensionError on wrong shape and ValueError on NaN/Inf.
    """
    dtype = complex if allow_complex else float
    a = np.asarray(data, dtype=dtype)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise DimensionError(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    if square and a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


def eigenvalues(a) -> np.ndarray:
    """Eigenvalues of a square matrix, with multiplicity, order unspecified."""
    a = as_matrix(a, square=True, allow_complex=np.iscomplexobj(a))
    try:
        return np.linalg.eigvals(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NumericError(f"eigenvalue iteration failed: {exc}") from exc


def expm(a) -> np.ndarray:
    """Matrix exponential (scaling-and-squaring with Pade core)."""
    a = as_matrix(a, square=True, allow_complex=np.iscomplexobj(a))
    return scipy.linalg.expm(a)


def is_invertible(a, tols: Tolerances = DEFAULT_TOLS) -> bool:
    """True iff the smallest singular value exceeds eq_tol times the largest.

    The zero matrix is reported as singular.
    """
    a = as_matrix(a, square=True, allow_complex=np.iscomplexobj(a))
    s = np.linalg.svd(a, compute_uv=False)
    if s[0] == 0.0:
        return False
    return bool(s[-1] > tols.eq_tol * s[0])


def spectral_radius(a) -> float:
    """max |lambda| over the spectrum of a."""
    return float(np.max(np.abs(eigenvalues(a)))) if min(np.shape(a)) else 0.0


def snap_spectrum(eigs, targets, spec_tol: float = DEFAULT_TOLS.spec_tol) -> np.ndarray:
    """Snap each eigenvalue to the nearest target value.

    Classification is all-or-nothing: any eigenvalue farther than spec_tol
    from every target raises NumericError rather than being silently
    rounded.
    """
    eigs = np.atleast_1d(np.asarray(eigs, dtype=complex))
    targets = np.atleast_1d(np.asarray(targets, dtype=complex))
    dist = np.abs(eigs[:, None] - targets[None, :])
    idx = np.argmin(dist, axis=1)
    worst = dist[np.arange(len(eigs)), idx].max(initial=0.0)
    if worst >= spec_tol:
        raise NumericError(
            f"eigenvalue off every target by {worst:.3e} (spec_tol={spec_tol:.1e})"
        )
    return targets[idx]


def rng_from_seed(seed: int) -> np.random.Generator:
    """All randomness in the package flows through an explicit 64-bit seed."""
    return np.random.Generator(np.random.PCG64(int(seed) & 0xFFFFFFFFFFFFFFFF))
