"""The fully explicit model: de Sitter space dS^d inside R^{1,d}.

Points are numpy vectors (x_0, x_1, ..., x_d) with the Lorentzian form
beta(x, y) = x_0 y_0 - x.y; dS^d is the quadric beta(x, x) = -1.  The
global causal order is the ambient closed-forward-cone order, the
modular flow is the x_0/x_1 boost, and the crown is the complex tube
whose imaginary part lies in the open forward light cone.

Scalar predicates live here; the grid scans used by the verification
suites run through nccgeo.backend (compiled kernel or numpy fallback).
"""

from __future__ import annotations

import json

import numpy as np

from .backend import kernels
from .errors import DimensionError, DomainError
from .numerics import rng_from_seed

__all__ = [
    "minkowski_vector",
    "ds_point",
    "complex_point",
    "lorentz_form",
    "causal_leq",
    "boost_flow",
    "wedge_member",
    "observer_member",
    "ds_geodesic",
    "crown_member",
    "complex_boost",
    "kms_member",
    "tau_fixed_crown_member",
    "random_ds_points",
    "wedge_scan",
    "kms_scan",
    "observer_scan",
    "point_to_json",
    "point_from_json",
]

EQ_TOL = 1e-9
BOUNDARY_BAND = 1e-6
QUADRIC_TOL = 1e-9


def minkowski_vector(components) -> np.ndarray:
    v = np.asarray(components, dtype=float)
    if v.ndim != 1 or v.size < 3:
        raise DimensionError("a Minkowski vector needs components (x_0, ..., x_d), d >= 2")
    if not np.all(np.isfinite(v)):
        raise ValueError("components must be finite")
    return v


def ds_point(components, tol: float = QUADRIC_TOL) -> np.ndarray:
    x = minkowski_vector(components)
    q = lorentz_form(x, x)
    if abs(q + 1.0) > tol * max(1.0, float(x @ x)):
        raise DomainError(f"not on the de Sitter quadric: beta(x,x) = {q:.12f}")
    return x


def complex_point(components) -> np.ndarray:
    z = np.asarray(components, dtype=complex)
    if z.ndim != 1 or z.size < 3:
        raise DimensionError("a complex point needs components (z_0, ..., z_d), d >= 2")
    if not np.all(np.isfinite(z)):
        raise ValueError("components must be finite")
    return z


def lorentz_form(x, y) -> float:
    x, y = np.asarray(x), np.asarray(y)
    if x.shape != y.shape:
        raise DimensionError(f"dimension mismatch: {x.shape} vs {y.shape}")
    return float(x[0] * y[0] - x[1:] @ y[1:])


def causal_leq(x, y, eq_tol: float = EQ_TOL) -> bool:
    """x <= y in the closed ambient forward-cone order."""
    v = np.asarray(y, dtype=float) - np.asarray(x, dtype=float)
    return bool(v[0] >= -eq_tol and lorentz_form(v, v) >= -eq_tol)


def boost_flow(t: float, x) -> np.ndarray:
    """The modular boost in the x_0/x_1 plane."""
    x = minkowski_vector(x)
    out = x.copy()
    c, s = np.cosh(t), np.sinh(t)
    out[0] = c * x[0] + s * x[1]
    out[1] = c * x[1] + s * x[0]
    return ds_point(out, tol=1e-7)


def wedge_member(x, band: float = BOUNDARY_BAND):
    """True/False outside the band around x_1 = |x_0|, None inside it."""
    x = np.asarray(x, dtype=float)
    margin = x[1] - abs(x[0])
    if margin > band:
        return True
    if margin < -band:
        return False
    return None


def observer_member(x, t_max: float = 20.0, n_grid: int = 400, eq_tol: float = EQ_TOL) -> bool:
    """Bounded scan for gamma(t) <= x <= gamma(s) along the boost geodesic."""
    if t_max <= 0:
        raise DomainError("t_max must be positive")
    pts = np.asarray(x, dtype=float)[None, :]
    return bool(kernels.observer_scan(np.ascontiguousarray(pts), t_max, n_grid, eq_tol)[0])


def ds_geodesic(x, v, t: float, eq_tol: float = 1e-8) -> np.ndarray:
    """Unit-speed geodesic through x with tangent v, beta(x,v) = 0.

    Timelike branch (beta(v,v) = +1): cosh(t) x + sinh(t) v.
    Spacelike branch (beta(v,v) = -1): cos(t) x + sin(t) v (closed).
    The point itself always satisfies beta(x,x) = -1; note that only the
    tangent normalization distinguishes the two branches.
    """
    x, v = ds_point(x), minkowski_vector(v)
    bvv = lorentz_form(v, v)
    if abs(lorentz_form(x, v)) > eq_tol:
        raise DomainError("geodesic direction must be orthogonal to the point")
    if abs(bvv - 1.0) <= eq_tol:
        out = np.cosh(t) * x + np.sinh(t) * v
    elif abs(bvv + 1.0) <= eq_tol:
        out = np.cos(t) * x + np.sin(t) * v
    else:
        raise DomainError("geodesic direction needs beta(v,v) = +/-1")
    return ds_point(out, tol=1e-7)


def crown_member(z, eq_tol: float = EQ_TOL) -> bool:
    """Imaginary part in the open forward light cone (with eq_tol slack)."""
    z = np.asarray(z, dtype=complex)
    y = z.imag
    return bool(y[0] > eq_tol and y[0] * y[0] > y[1:] @ y[1:] + eq_tol * eq_tol)


def complex_boost(t: float, z) -> np.ndarray:
    """Analytic continuation of the modular flow at imaginary time t."""
    z = np.asarray(z, dtype=complex)
    out = z.copy()
    c, s = np.cos(t), np.sin(t)
    out[0] = c * z[0] + 1j * s * z[1]
    out[1] = 1j * s * z[0] + c * z[1]
    return out


def kms_member(
    x, n_grid: int = 64, band: float = BOUNDARY_BAND, eq_tol: float = EQ_TOL
) -> bool:
    """True iff alpha_{it}(x) stays in the crown on a grid of (0, pi)."""
    if n_grid < 8:
        raise DomainError("kms_member needs n_grid >= 8")
    pts = np.asarray(x, dtype=float)[None, :]
    return bool(kernels.kms_scan(np.ascontiguousarray(pts), n_grid, band, eq_tol)[0])


def tau_fixed_crown_member(z, eq_tol: float = EQ_TOL) -> bool:
    """Membership in the fixed set of the twisted conjugation on the crown:
    z = (i x_0, i x_1, x_2, ..., x_d) with x_0 > |x_1| on the complexified
    quadric."""
    z = np.asarray(z, dtype=complex)
    if abs(z[0].real) > eq_tol or abs(z[1].real) > eq_tol:
        return False
    if np.max(np.abs(z[2:].imag), initial=0.0) > eq_tol:
        return False
    x0, x1 = z[0].imag, z[1].imag
    rest = z[2:].real
    if not x0 > abs(x1):
        return False
    quadric = -x0 * x0 + x1 * x1 - rest @ rest
    return bool(abs(quadric + 1.0) <= max(eq_tol, 1e-9 * (1.0 + x0 * x0)))


# ---------------------------------------------------------------------------
# batch scans and sampling


def _pts(points) -> np.ndarray:
    return np.ascontiguousarray(np.atleast_2d(np.asarray(points, dtype=float)))


def wedge_scan(points, band: float = BOUNDARY_BAND) -> np.ndarray:
    return kernels.wedge_scan(_pts(points), band)


def kms_scan(points, n_grid: int = 64, band: float = BOUNDARY_BAND, eq_tol: float = EQ_TOL) -> np.ndarray:
    return kernels.kms_scan(_pts(points), n_grid, band, eq_tol)


def observer_scan(points, t_max: float = 20.0, n_grid: int = 400, eq_tol: float = EQ_TOL) -> np.ndarray:
    return kernels.observer_scan(_pts(points), t_max, n_grid, eq_tol)


def random_ds_points(d: int, count: int, seed: int, boost_range: float = 3.0) -> np.ndarray:
    """Sample dS^d as (sinh u, cosh u * unit direction)."""
    rng = rng_from_seed(seed)
    u = rng.uniform(-boost_range, boost_range, count)
    dirs = rng.normal(size=(count, d))
    dirs /= np.linalg.norm(dirs, axis=1)[:, None]
    pts = np.empty((count, d + 1))
    pts[:, 0] = np.sinh(u)
    pts[:, 1:] = np.cosh(u)[:, None] * dirs
    return pts


# ---------------------------------------------------------------------------
# JSON wire format


def point_to_json(x) -> str:
    x = np.asarray(x)
    if np.iscomplexobj(x):
        return json.dumps([[float(c.real), float(c.imag)] for c in x])
    return json.dumps([float(c) for c in x])


def point_from_json(text: str) -> np.ndarray:
    data = json.loads(text)
    if data and isinstance(data[0], list):
        return np.array([complex(re, im) for re, im in data])
    return np.asarray(data, dtype=float)
