"""Pure-numpy fallback for the de Sitter grid-scan kernels.

Mirrors the signatures of the compiled module ``nccgeo._kernels``;
selected at import time by ``nccgeo.backend`` when the extension is
unavailable or disabled.
"""

import numpy as np

COMPILED = False


def wedge_scan(pts: np.ndarray, band: float) -> np.ndarray:
    """Per point: 1 inside the wedge, 0 outside, -1 within the band."""
    margin = pts[:, 1] - np.abs(pts[:, 0])
    out = np.full(len(pts), -1, dtype=np.int8)
    out[margin > band] = 1
    out[margin < -band] = 0
    return out


def kms_scan(pts: np.ndarray, n_grid: int, band: float, eq_tol: float) -> np.ndarray:
    """1 iff the complexified flow orbit stays in the crown on the whole
    t-grid in (band, pi - band)."""
    t = np.linspace(band, np.pi - band, n_grid)
    sin_t = np.sin(t)
    y0 = sin_t[None, :] * pts[:, 1][:, None]
    y1 = sin_t[None, :] * pts[:, 0][:, None]
    ok = (y0 > eq_tol) & (y0 * y0 > y1 * y1 + eq_tol * eq_tol)
    return np.all(ok, axis=1).astype(np.int8)


def observer_scan(
    pts: np.ndarray, t_max: float, n_grid: int, eq_tol: float
) -> np.ndarray:
    """1 iff some grid gamma(t) <= x and some x <= gamma(s)."""
    t = np.linspace(-t_max, t_max, n_grid)
    gamma = np.zeros((n_grid, pts.shape[1]))
    gamma[:, 0] = np.sinh(t)
    gamma[:, 1] = np.cosh(t)
    # v = x - gamma(t): down condition gamma(t) <= x
    v0 = pts[:, 0][:, None] - gamma[:, 0][None, :]
    beta = v0 * v0
    for j in range(1, pts.shape[1]):
        vj = pts[:, j][:, None] - gamma[:, j][None, :]
        beta -= vj * vj
    down = np.any((v0 >= -eq_tol) & (beta >= -eq_tol), axis=1)
    up = np.any((-v0 >= -eq_tol) & (beta >= -eq_tol), axis=1)
    return (down & up).astype(np.int8)


def causal_batch(x: np.ndarray, y: np.ndarray, eq_tol: float) -> np.ndarray:
    """Pairwise x_i <= y_i for stacked rows."""
    v = y - x
    beta = v[:, 0] * v[:, 0] - np.sum(v[:, 1:] * v[:, 1:], axis=1)
    return ((v[:, 0] >= -eq_tol) & (beta >= -eq_tol)).astype(np.int8)
