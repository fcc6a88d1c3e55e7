"""Jordan triple system on g_1(h), Bergman operators, Bruhat-cell chart.

The triple product is {x,y,z} = -[[x, theta(y)], z]/2 on g_1; its
spectral norm sqrt(rho(x box x)) cuts out the bounded domain D that
realizes the open H-orbit in G/P^-.  Staying inside the open cell is
equivalent to joint invertibility of the Bergman operators, and is
decided here by a trailing block-LDU of the defining matrix along the
eigenspaces of h.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConsistencyError, DomainError, NumericError
from .grading import SymmetricStructure
from .liecore import AlgebraElement, GroupElement, bracket, group_identity
from .numerics import expm, is_invertible, rng_from_seed

__all__ = [
    "TripleSystem",
    "CellPoint",
    "triple_system",
    "triple",
    "box_operator",
    "bergman_plus",
    "bergman_minus",
    "spectral_norm",
    "bruhat_factor",
    "conformal_action",
    "ball_status",
    "convexity_check",
    "compression_member",
    "sample_ball",
]


@dataclass(frozen=True)
class TripleSystem:
    """Bases of g_{+1} and g_{-1} together with the restricted theta map."""

    structure: SymmetricStructure
    basis_plus: np.ndarray = field(repr=False)
    basis_minus: np.ndarray = field(repr=False)

    @property
    def algebra(self):
        return self.structure.algebra

    @property
    def dim_plus(self) -> int:
        return self.basis_plus.shape[0]

    def element_plus(self, cell_coords) -> AlgebraElement:
        return AlgebraElement(self.algebra, np.asarray(cell_coords) @ self.basis_plus)

    def cell_coords(self, x: AlgebraElement) -> np.ndarray:
        return self.basis_plus @ x.coords

    def contains_plus(self, x: AlgebraElement, tol: float = 1e-8) -> bool:
        b = self.basis_plus
        resid = np.linalg.norm(x.coords - b.T @ (b @ x.coords))
        return resid <= tol * max(1.0, x.norm())

    def contains_minus(self, x: AlgebraElement, tol: float = 1e-8) -> bool:
        b = self.basis_minus
        resid = np.linalg.norm(x.coords - b.T @ (b @ x.coords))
        return resid <= tol * max(1.0, x.norm())


@dataclass(frozen=True)
class CellPoint:
    """A point exp(x).eP^- of the open Bruhat cell in affine coordinates."""

    system: TripleSystem
    coords: np.ndarray

    def to_element(self) -> AlgebraElement:
        return self.system.element_plus(self.coords)


def triple_system(structure: SymmetricStructure) -> TripleSystem:
    ts = TripleSystem(
        structure=structure,
        basis_plus=structure.grading.basis_plus,
        basis_minus=structure.grading.basis_minus,
    )
    # theta must exchange g_{+1} and g_{-1}
    for row in ts.basis_plus:
        img = structure.theta @ row
        resid = np.linalg.norm(img - ts.basis_minus.T @ (ts.basis_minus @ img))
        if resid > 1e-9:
            raise ConsistencyError("theta does not map g_1 into g_{-1}")
    return ts


def triple(ts: TripleSystem, x: AlgebraElement, y: AlgebraElement, z: AlgebraElement) -> AlgebraElement:
    """{x, y, z} = -[[x, theta(y)], z] / 2 on g_1."""
    for v in (x, y, z):
        if not ts.contains_plus(v):
            raise DomainError("triple arguments must lie in g_1")
    out = -0.5 * bracket(bracket(x, ts.structure.apply_theta(y)), z)
    if not ts.contains_plus(out):
        raise ConsistencyError("triple product left g_1")
    return out


def box_operator(ts: TripleSystem, x: AlgebraElement, y: AlgebraElement) -> np.ndarray:
    """Matrix of z -> {x, y, z} on g_1 in cell coordinates."""
    from .liecore import ad_matrix

    mid = bracket(x, ts.structure.apply_theta(y))
    op = -0.5 * ad_matrix(mid)
    b = ts.basis_plus
    return b @ op @ b.T


def _restrict(op: np.ndarray, basis: np.ndarray) -> np.ndarray:
    return basis @ op @ basis.T


def bergman_plus(ts: TripleSystem, x: AlgebraElement, y: AlgebraElement) -> np.ndarray:
    """B_+(x, y) = 1 + ad(x) ad(y) + (ad x)^2 (ad y)^2 / 4 on g_1."""
    from .liecore import ad_matrix

    if not ts.contains_plus(x):
        raise DomainError("first Bergman argument must lie in g_1")
    if not ts.contains_minus(y):
        raise DomainError("second Bergman argument must lie in g_{-1}")
    ax, ay = ad_matrix(x), ad_matrix(y)
    op = np.eye(ts.algebra.dim) + ax @ ay + 0.25 * ax @ ax @ ay @ ay
    return _restrict(op, ts.basis_plus)


def bergman_minus(ts: TripleSystem, y: AlgebraElement, x: AlgebraElement) -> np.ndarray:
    """B_-(y, x) = 1 + ad(y) ad(x) + (ad y)^2 (ad x)^2 / 4 on g_{-1}."""
    from .liecore import ad_matrix

    if not ts.contains_minus(y):
        raise DomainError("first Bergman argument must lie in g_{-1}")
    if not ts.contains_plus(x):
        raise DomainError("second Bergman argument must lie in g_1")
    ax, ay = ad_matrix(x), ad_matrix(y)
    op = np.eye(ts.algebra.dim) + ay @ ax + 0.25 * ay @ ay @ ax @ ax
    return _restrict(op, ts.basis_minus)


def spectral_norm(ts: TripleSystem, x: AlgebraElement) -> float:
    """sqrt of the top eigenvalue of z -> {x, x, z} on g_1."""
    if not ts.contains_plus(x):
        raise DomainError("spectral norm is defined on g_1")
    op = box_operator(ts, x, x)
    eigs = np.linalg.eigvals(op)
    if np.max(np.abs(eigs.imag), initial=0.0) > 1e-8 * max(1.0, np.abs(eigs).max()):
        raise NumericError("x box x has non-real spectrum")
    vals = eigs.real
    tol = ts.structure.tols.eq_tol
    if vals.min(initial=0.0) < -tol * max(1.0, abs(vals).max()):
        raise NumericError("x box x is not positive; triple system not positive")
    return float(np.sqrt(max(vals.max(initial=0.0), 0.0)))


def norm_of_minus(ts: TripleSystem, y: AlgebraElement) -> float:
    """Spectral norm of an element of g_{-1}, measured through theta."""
    return spectral_norm(ts, ts.structure.apply_theta(y))


# ---------------------------------------------------------------------------
# Bruhat factorization


def _nilpotent_log(u: np.ndarray, order: int) -> np.ndarray:
    n = u - np.eye(u.shape[0])
    out = np.zeros_like(n)
    term = np.eye(u.shape[0])
    for k in range(1, order + 1):
        term = term @ n
        out += ((-1) ** (k + 1) / k) * term
    return out


def _bruhat_matrix(structure: SymmetricStructure, mat: np.ndarray):
    """Trailing block-LDU of mat along the descending eigenblocks of h.

    Returns (u_mat, d_mat, v_mat) with mat = exp-free product
    U @ D @ L, U/L unipotent upper/lower block triangular, or None when a
    trailing pivot block is singular (the point left the open cell).
    """
    q, _, blocks = structure.defining_blocks
    m = q.T @ mat @ q
    k = len(blocks)
    n = mat.shape[0]
    u = np.eye(n)
    low = np.eye(n)
    d = np.zeros_like(m)
    work = m.copy()
    tols = structure.tols
    for b in range(k - 1, 0, -1):
        s, e = blocks[b]
        pivot = work[s:e, s:e]
        if not is_invertible(pivot, tols):
            return None
        pinv = np.linalg.inv(pivot)
        d[s:e, s:e] = pivot
        top = slice(0, s)
        u[top, s:e] = work[top, s:e] @ pinv
        low[s:e, top] = pinv @ work[s:e, top]
        work[top, top] = work[top, top] - work[top, s:e] @ pinv @ work[s:e, top]
        work[top, s:e] = 0.0
        work[s:e, top] = 0.0
    s, e = blocks[0]
    if not is_invertible(work[s:e, s:e], tols):
        return None
    d[s:e, s:e] = work[s:e, s:e]
    u_mat = q @ _nilpotent_log(u, k) @ q.T
    v_mat = q @ _nilpotent_log(low, k) @ q.T
    d_mat = q @ d @ q.T
    return u_mat, d_mat, v_mat


def bruhat_factor(ts: TripleSystem, g: GroupElement):
    """g = exp(u) m exp(v) with u in g_1, m in G^h, v in g_{-1}.

    Returns None when g.eP^- lies outside the open Bruhat cell.
    """
    res = _bruhat_matrix(ts.structure, g.matrix)
    if res is None:
        return None
    u_mat, d_mat, v_mat = res
    alg = ts.algebra
    u = alg.element_from_matrix(u_mat)
    v = alg.element_from_matrix(v_mat)
    if not ts.contains_plus(u, tol=1e-7) or not ts.contains_minus(v, tol=1e-7):
        raise ConsistencyError("Bruhat factors left their graded subspaces")
    m = GroupElement(alg, d_mat)
    return u, m, v


def conformal_action(ts: TripleSystem, g: GroupElement, p: CellPoint):
    """Image of a cell point under g, or None when it leaves the cell."""
    mat = g.matrix @ expm(p.to_element().matrix)
    res = _bruhat_matrix(ts.structure, mat)
    if res is None:
        return None
    u_mat, _, _ = res
    u = ts.algebra.element_from_matrix(u_mat)
    return CellPoint(ts, ts.cell_coords(u))


def ball_status(ts: TripleSystem, g: GroupElement) -> str:
    """Classify g.D against the cell: "outside", "contained" or "bounded".

    Factors g through P^+ exp(y), y in g_{-1}, and classifies by the
    spectral norm of y with the boundary band.
    """
    res = _bruhat_matrix(ts.structure, g.matrix)
    if res is None:
        return "outside"
    _, _, v_mat = res
    v = ts.algebra.element_from_matrix(v_mat)
    band = ts.structure.tols.boundary_band
    ny = norm_of_minus(ts, v)
    if ny < 1.0 - band:
        return "bounded"
    if ny <= 1.0 + band:
        return "contained"
    return "outside"


def sample_ball(ts: TripleSystem, rng, count: int) -> np.ndarray:
    """Uniform samples of D (spectral-norm ball) by box rejection."""
    k = ts.dim_plus
    out = np.empty((count, k))
    filled = 0
    while filled < count:
        cand = rng.uniform(-1.0, 1.0, size=k)
        if spectral_norm(ts, ts.element_plus(cand)) < 1.0:
            out[filled] = cand
            filled += 1
    return out


def convexity_check(ts: TripleSystem, g: GroupElement, n_pairs: int, seed: int) -> bool:
    """Midpoint test of the convexity of g.D inside the cell.

    Samples pairs from g.D (push-forward of uniform samples of D) and
    checks every midpoint pulls back into the closed unit ball.
    """
    if ball_status(ts, g) == "outside":
        raise DomainError("convexity check requires g.D inside the cell")
    rng = rng_from_seed(seed)
    band = ts.structure.tols.boundary_band
    g_inv = g.inverse()
    pushed = []
    attempts = 0
    while len(pushed) < 2 * n_pairs and attempts < 20 * n_pairs:
        attempts += 1
        cand = CellPoint(ts, sample_ball(ts, rng, 1)[0])
        img = conformal_action(ts, g, cand)
        if img is not None:
            pushed.append(img.coords)
    if len(pushed) < 2 * n_pairs:
        raise NumericError("could not push enough sample points into the cell")
    for i in range(n_pairs):
        mid = 0.5 * (pushed[2 * i] + pushed[2 * i + 1])
        back = conformal_action(ts, g_inv, CellPoint(ts, mid))
        if back is None:
            return False
        if spectral_norm(ts, back.to_element()) >= 1.0 + band:
            return False
    return True


def compression_member(
    ts: TripleSystem,
    g: GroupElement,
    cone=None,
    n_samples: int = 200,
    seed: int = 0,
) -> bool:
    """Sampling test of g.D inside D (the compression semigroup).

    The cone argument documents which maximal cone the semigroup
    H exp(-C_q^max) refers to; the test itself is purely sampling-based.
    """
    del cone
    rng = rng_from_seed(seed)
    band = ts.structure.tols.boundary_band
    for coords in sample_ball(ts, rng, n_samples):
        img = conformal_action(ts, g, CellPoint(ts, coords))
        if img is None:
            return False
        if spectral_norm(ts, img.to_element()) >= 1.0 + band:
            return False
    return True
