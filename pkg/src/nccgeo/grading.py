"""Euler elements, 3-grading projectors and the involution splittings.

An Euler element h has ad h diagonalizable with spectrum in {-1, 0, 1}.
The grading projectors are polynomials in A = ad h, the involution
tau_h is the polynomial I - 2 A^2 (identical to e^{i pi ad h} on a
3-graded algebra and exactly involutive), and tau = tau_h o theta.
Subspace bases are orthonormalized ranges of the corresponding
projectors, so membership tests reduce to projection residuals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DomainError
from .liecore import AlgebraDescriptor, AlgebraElement, ad_matrix
from .numerics import DEFAULT_TOLS, Tolerances, eigenvalues

__all__ = [
    "GradingData",
    "SymmetricStructure",
    "check_euler",
    "grading_projectors",
    "symmetric_structure",
    "canonical_euler",
    "euler_labels",
]

SUBSPACES = ("h", "q", "k", "p", "hk", "hp", "qk", "qp")


def _orth_range(p: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Orthonormal basis (rows) of the range of a projector matrix."""
    u, s, _ = np.linalg.svd(p)
    rank = int(np.sum(s > 0.5))
    if rank == 0:
        return np.zeros((0, p.shape[0]))
    return u[:, :rank].T


def check_euler(x: AlgebraElement, tols: Tolerances = DEFAULT_TOLS) -> bool:
    """True iff ad x is nonzero, diagonalizable, with spectrum in {-1,0,1}.

    Diagonalizability is certified by the minimal polynomial:
    A(A - I)(A + I) must annihilate ad x.
    """
    a = ad_matrix(x)
    eigs = eigenvalues(a)
    dist = np.abs(eigs[:, None] - np.array([-1.0, 0.0, 1.0])[None, :])
    if dist.min(axis=1).max(initial=0.0) >= tols.spec_tol:
        return False
    if not np.any(np.abs(np.abs(eigs) - 1.0) < tols.spec_tol):
        return False
    eye = np.eye(a.shape[0])
    minpoly = a @ (a - eye) @ (a + eye)
    scale = max(1.0, np.linalg.norm(a)) ** 3
    return bool(np.linalg.norm(minpoly) <= tols.eq_tol * scale)


@dataclass(frozen=True)
class GradingData:
    """Spectral projectors of ad h onto g_{-1}, g_0, g_{+1} (on coordinates)."""

    h: AlgebraElement
    P_minus: np.ndarray = field(repr=False)
    P_zero: np.ndarray = field(repr=False)
    P_plus: np.ndarray = field(repr=False)
    dims: tuple[int, int, int]

    @cached_property
    def basis_minus(self) -> np.ndarray:
        return _orth_range(self.P_minus)

    @cached_property
    def basis_zero(self) -> np.ndarray:
        return _orth_range(self.P_zero)

    @cached_property
    def basis_plus(self) -> np.ndarray:
        return _orth_range(self.P_plus)


def grading_projectors(x: AlgebraElement, tols: Tolerances = DEFAULT_TOLS) -> GradingData:
    """P_+ = A(A+I)/2, P_- = A(A-I)/2, P_0 = I - A^2 for A = ad x."""
    if not check_euler(x, tols):
        raise DomainError("grading projectors require an Euler element")
    a = ad_matrix(x)
    eye = np.eye(a.shape[0])
    p_plus = 0.5 * a @ (a + eye)
    p_minus = 0.5 * a @ (a - eye)
    p_zero = eye - a @ a
    dims = (
        int(round(np.trace(p_minus))),
        int(round(np.trace(p_zero))),
        int(round(np.trace(p_plus))),
    )
    return GradingData(x, p_minus, p_zero, p_plus, dims)


@dataclass(frozen=True)
class SymmetricStructure:
    """The full involution bookkeeping attached to a causal Euler element.

    theta is the Cartan involution x -> -x^T on coordinates, tau_h the
    grading involution, tau = tau_h o theta, and the eight subspaces
    h, q, k, p, hk, hp, qk, qp come with orthonormal coordinate bases.
    """

    algebra: AlgebraDescriptor
    h: AlgebraElement
    grading: GradingData
    theta: np.ndarray = field(repr=False)
    tau_h: np.ndarray = field(repr=False)
    tau: np.ndarray = field(repr=False)
    bases: dict = field(repr=False)
    tols: Tolerances = DEFAULT_TOLS

    def basis(self, name: str) -> np.ndarray:
        return self.bases[name]

    def dim(self, name: str) -> int:
        return self.bases[name].shape[0]

    def in_subspace(self, x: AlgebraElement, name: str, tol: float | None = None) -> bool:
        b = self.bases[name]
        resid = np.linalg.norm(x.coords - b.T @ (b @ x.coords))
        tol = self.tols.eq_tol if tol is None else tol
        return resid <= tol * max(1.0, x.norm())

    def project(self, x: AlgebraElement, name: str) -> AlgebraElement:
        b = self.bases[name]
        return AlgebraElement(self.algebra, b.T @ (b @ x.coords))

    def q_part(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self.algebra, 0.5 * (x.coords - self.tau @ x.coords))

    def h_part(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self.algebra, 0.5 * (x.coords + self.tau @ x.coords))

    def apply_theta(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self.algebra, self.theta @ x.coords)

    def apply_tau(self, x: AlgebraElement) -> AlgebraElement:
        return AlgebraElement(self.algebra, self.tau @ x.coords)

    @cached_property
    def defining_blocks(self):
        """Eigen-structure of the defining matrix of h (symmetric by the
        theta(h) = -h precondition): orthogonal Q, snapped eigenvalues in
        descending order, and block boundaries.  Drives the Bruhat LDU."""
        w, q = np.linalg.eigh(self.h.matrix)
        order = np.argsort(-w)
        w, q = w[order], q[:, order]
        blocks, start = [], 0
        for i in range(1, len(w) + 1):
            if i == len(w) or abs(w[i] - w[start]) > 1e-6:
                blocks.append((start, i))
                start = i
        return q, w, blocks

    @cached_property
    def rotation_generators(self) -> list[AlgebraElement]:
        """Orthonormal q_k basis rescaled so each generator has ad-spectral
        radius 1 (the natural angle normalization for Omega tests)."""
        gens = []
        for row in self.bases["qk"]:
            x = AlgebraElement(self.algebra, row)
            rho = float(np.max(np.abs(eigenvalues(ad_matrix(x)))))
            gens.append(AlgebraElement(self.algebra, row / rho) if rho > 0 else x)
        return gens

    @cached_property
    def boost_generators(self) -> list[AlgebraElement]:
        """h_alg basis rescaled to ad-spectral radius 1."""
        gens = []
        for row in self.bases["h"]:
            x = AlgebraElement(self.algebra, row)
            rho = float(np.max(np.abs(eigenvalues(ad_matrix(x)))))
            gens.append(AlgebraElement(self.algebra, row / rho) if rho > 0 else x)
        return gens


def symmetric_structure(
    h: AlgebraElement, tols: Tolerances = DEFAULT_TOLS
) -> SymmetricStructure:
    """Build theta/tau_h/tau and all eight subspace bases for an Euler h.

    Requires theta(h) = -h, i.e. h symmetric in the defining
    representation; move h into p first otherwise.
    """
    alg = h.algebra
    grading = grading_projectors(h, tols)
    theta = alg.theta_coords
    if np.linalg.norm(theta @ h.coords + h.coords) > tols.eq_tol * max(1.0, h.norm()):
        raise DomainError("theta(h) != -h: the Euler element must be symmetric")

    a = ad_matrix(h)
    eye = np.eye(alg.dim)
    tau_h = eye - 2.0 * a @ a
    tau = tau_h @ theta

    for name, inv in (("theta", theta), ("tau_h", tau_h), ("tau", tau)):
        if np.linalg.norm(inv @ inv - eye) > 1e-8 * alg.dim:
            raise DomainError(f"{name} failed to be involutive")
    # tau_h must be (-1)^j on g_j
    for sign, p in ((1.0, grading.P_zero), (-1.0, grading.P_plus), (-1.0, grading.P_minus)):
        if np.linalg.norm(tau_h @ p - sign * p) > 1e-8 * alg.dim:
            raise DomainError("tau_h is not the grading involution")

    p_h = 0.5 * (eye + tau)
    p_q = 0.5 * (eye - tau)
    p_k = 0.5 * (eye + theta)
    p_p = 0.5 * (eye - theta)
    bases = {
        "h": _orth_range(p_h),
        "q": _orth_range(p_q),
        "k": _orth_range(p_k),
        "p": _orth_range(p_p),
        "hk": _orth_range(p_h @ p_k),
        "hp": _orth_range(p_h @ p_p),
        "qk": _orth_range(p_q @ p_k),
        "qp": _orth_range(p_q @ p_p),
    }
    if bases["h"].shape[0] + bases["q"].shape[0] != alg.dim:
        raise DomainError("h + q does not fill the algebra")
    for whole, parts in (("q", ("qk", "qp")), ("h", ("hk", "hp"))):
        if bases[whole].shape[0] != sum(bases[p_].shape[0] for p_ in parts):
            raise DomainError(f"{parts} do not split {whole}")

    return SymmetricStructure(alg, h, grading, theta, tau_h, tau, bases, tols)


# ---------------------------------------------------------------------------
# canonical Euler elements


def _euler_sl_like(alg: AlgebraDescriptor, j: int) -> AlgebraElement:
    n = alg.defining_dim
    if not 1 <= j <= n - 1:
        raise DomainError(f"no Euler element h{j} in {alg.name}")
    d = np.concatenate([np.full(j, (n - j) / n), np.full(n - j, -j / n)])
    return alg.element_from_matrix(np.diag(d))


def _euler_so_boost(alg: AlgebraDescriptor) -> AlgebraElement:
    p, _ = alg.params
    n = alg.defining_dim
    m = np.zeros((n, n))
    m[0, p] = 1.0
    m[p, 0] = 1.0
    return alg.element_from_matrix(m)


def _euler_so_spinor(alg: AlgebraDescriptor, flip_last: bool) -> AlgebraElement:
    p, q = alg.params
    if p != q:
        raise DomainError("spinor Euler elements need so(n,n)")
    n = p
    m = np.zeros((2 * n, 2 * n))
    for i in range(n):
        sign = -1.0 if (flip_last and i == n - 1) else 1.0
        m[i, n + i] = 0.5 * sign
        m[n + i, i] = 0.5 * sign
    return alg.element_from_matrix(m)


def _euler_sp(alg: AlgebraDescriptor) -> AlgebraElement:
    n = alg.defining_dim // 2
    d = np.concatenate([np.full(n, 0.5), np.full(n, -0.5)])
    return alg.element_from_matrix(np.diag(d))


def euler_labels(alg: AlgebraDescriptor) -> list[str]:
    """Labels accepted by canonical_euler for this algebra."""
    if alg.family in ("sl", "gl"):
        return [f"h{j}" for j in range(1, alg.defining_dim)]
    if alg.family == "so":
        labels = ["boost", "h1"]
        if alg.params[0] == alg.params[1]:
            labels += ["hn", "hn-1"]
        return labels
    if alg.family == "sp":
        return ["hn", "h1"]
    return []


def canonical_euler(alg: AlgebraDescriptor, label: str) -> AlgebraElement:
    """The named Euler element of a classical family.

    sl/gl: "h1".."h{n-1}" (diagonal, trace-free); so(p,q): "boost"
    (= "h1", the e_1/e_{p+1} boost); so(n,n) additionally "hn" and
    "hn-1"; sp(2n): "hn" (= half the block signature matrix).
    """
    label = label.strip().lower().replace("_", "")
    if alg.family in ("sl", "gl"):
        if label.startswith("h") and label[1:].isdigit():
            return _euler_sl_like(alg, int(label[1:]))
    elif alg.family == "so":
        if label in ("boost", "h1"):
            return _euler_so_boost(alg)
        if label == "hn":
            return _euler_so_spinor(alg, flip_last=False)
        if label == "hn-1":
            return _euler_so_spinor(alg, flip_last=True)
    elif alg.family == "sp":
        if label in ("hn", "h1"):
            return _euler_sp(alg)
    raise DomainError(f"unknown Euler label {label!r} for {alg.name}")
