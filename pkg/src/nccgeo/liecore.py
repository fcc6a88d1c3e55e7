"""Matrix realizations of the classical families sl, gl, so(p,q), sp.

A descriptor fixes an ordered basis of the algebra in its defining
representation; elements live as coordinate vectors relative to that
basis.  Coordinate extraction goes through a precomputed pseudo-inverse
of the basis-flattening matrix and complains loudly (ConsistencyError)
whenever a matrix drifts out of the span, which catches non-automorphism
conjugations early.

The Cartan involution is theta(x) = -x^T for every family; so(p,q) is
realized with the metric diag(1_p, -1_q) precisely so that this holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import ConsistencyError, DimensionError, DomainError
from .numerics import DEFAULT_TOLS, Tolerances, as_matrix, expm

__all__ = [
    "AlgebraDescriptor",
    "AlgebraElement",
    "GroupElement",
    "build_algebra",
    "parse_algebra",
    "bracket",
    "ad_matrix",
    "killing",
    "adjoint_action",
    "group_exp",
    "group_identity",
    "group_product",
    "group_inverse",
]

_FAMILIES = ("sl", "gl", "so", "sp")


@dataclass(frozen=True)
class AlgebraDescriptor:
    """A real matrix Lie algebra with a fixed ordered basis."""

    family: str
    params: tuple[int, ...]
    defining_dim: int
    basis: np.ndarray  # shape (dim, n, n)
    name: str

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @cached_property
    def _flat(self) -> np.ndarray:
        return self.basis.reshape(self.dim, -1)

    @cached_property
    def _flat_pinv(self) -> np.ndarray:
        return np.linalg.pinv(self._flat)

    @cached_property
    def ad_tensor(self) -> np.ndarray:
        """ad_tensor[i] is the coordinate matrix of ad(basis_i)."""
        dim, n = self.dim, self.defining_dim
        t = np.empty((dim, dim, dim))
        for i in range(dim):
            bi = self.basis[i]
            for j in range(dim):
                bj = self.basis[j]
                t[i, :, j] = self.coords_of(bi @ bj - bj @ bi)
        return t

    @cached_property
    def killing_gram(self) -> np.ndarray:
        """Gram matrix of the Cartan-Killing form kappa(x,y) = tr(ad x ad y)."""
        ad = self.ad_tensor
        return np.einsum("iab,jba->ij", ad, ad)

    @cached_property
    def theta_coords(self) -> np.ndarray:
        """Coordinate matrix of the Cartan involution x -> -x^T."""
        cols = [self.coords_of(-self.basis[i].T) for i in range(self.dim)]
        return np.array(cols).T

    def coords_of(self, mat, tol: float = DEFAULT_TOLS.eq_tol) -> np.ndarray:
        """Coordinates of a defining-representation matrix in the basis."""
        mat = np.asarray(mat, dtype=float)
        if mat.shape != (self.defining_dim, self.defining_dim):
            raise DimensionError(
                f"expected {self.defining_dim}x{self.defining_dim}, got {mat.shape}"
            )
        vec = mat.reshape(-1)
        coords = vec @ self._flat_pinv
        residual = np.linalg.norm(coords @ self._flat - vec)
        scale = max(1.0, np.linalg.norm(vec))
        if residual > tol * scale:
            raise ConsistencyError(
                f"matrix is not in {self.name}: residual {residual:.3e}"
            )
        return coords

    def element(self, coords) -> "AlgebraElement":
        coords = np.asarray(coords, dtype=float)
        if coords.shape != (self.dim,):
            raise DimensionError(f"expected {self.dim} coordinates, got {coords.shape}")
        return AlgebraElement(self, coords)

    def element_from_matrix(self, mat) -> "AlgebraElement":
        return AlgebraElement(self, self.coords_of(mat))

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, np.zeros(self.dim))

    def __repr__(self):  # pragma: no cover - cosmetic
        return f"AlgebraDescriptor({self.name}, dim={self.dim})"


@dataclass(frozen=True)
class AlgebraElement:
    """An element of the algebra, stored in basis coordinates."""

    algebra: AlgebraDescriptor
    coords: np.ndarray = field(repr=False)

    @cached_property
    def matrix(self) -> np.ndarray:
        return np.tensordot(self.coords, self.algebra.basis, axes=1)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coords))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _same_algebra(self, other)
        return AlgebraElement(self.algebra, self.coords + other.coords)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        _same_algebra(self, other)
        return AlgebraElement(self.algebra, self.coords - other.coords)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, -self.coords)

    def __mul__(self, scalar: float) -> "AlgebraElement":
        return AlgebraElement(self.algebra, float(scalar) * self.coords)

    __rmul__ = __mul__

    def __repr__(self):  # pragma: no cover - cosmetic
        return f"AlgebraElement({self.algebra.name}, {np.round(self.coords, 6)})"


@dataclass(frozen=True)
class GroupElement:
    """An element of the identity component of the matrix group.

    Instances are only produced as ordered products of exponentials of
    algebra elements (or by the Bruhat factorization, which stays inside
    the group), never from arbitrary matrices.
    """

    algebra: AlgebraDescriptor
    matrix: np.ndarray = field(repr=False)
    log_factors: tuple[AlgebraElement, ...] | None = None

    def __post_init__(self):
        m = as_matrix(self.matrix, square=True)
        det = np.linalg.det(m)
        if abs(det) < 1e-12:
            raise DomainError("group element must be invertible")
        if self.algebra.family in ("sl", "so", "sp") and abs(det - 1.0) > 1e-6:
            raise DomainError(f"det = {det:.6f} violates the family constraint")

    def inverse(self) -> "GroupElement":
        inv_factors = None
        if self.log_factors is not None:
            inv_factors = tuple(-x for x in reversed(self.log_factors))
        return GroupElement(self.algebra, np.linalg.inv(self.matrix), inv_factors)

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        _same_algebra(self, other)
        factors = None
        if self.log_factors is not None and other.log_factors is not None:
            factors = self.log_factors + other.log_factors
        return GroupElement(self.algebra, self.matrix @ other.matrix, factors)


def _same_algebra(a, b):
    if a.algebra is not b.algebra and a.algebra != b.algebra:
        raise DomainError("operands belong to different algebras")


# ---------------------------------------------------------------------------
# construction


def _basis_sl(n):
    mats = []
    for i in range(n):
        for j in range(n):
            if i != j:
                m = np.zeros((n, n))
                m[i, j] = 1.0
                mats.append(m)
    for k in range(n - 1):
        m = np.zeros((n, n))
        m[k, k] = 1.0
        m[k + 1, k + 1] = -1.0
        mats.append(m)
    return np.array(mats)


def _basis_gl(n):
    mats = []
    for i in range(n):
        for j in range(n):
            m = np.zeros((n, n))
            m[i, j] = 1.0
            mats.append(m)
    return np.array(mats)


def _basis_so(p, q):
    n = p + q
    eta = np.concatenate([np.ones(p), -np.ones(q)])
    mats = []
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n))
            m[i, j] = 1.0
            m[j, i] = -eta[i] * eta[j]
            mats.append(m)
    return np.array(mats)


def _basis_sp(two_n):
    n = two_n // 2
    mats = []
    for i in range(n):
        for j in range(n):
            m = np.zeros((two_n, two_n))
            m[i, j] = 1.0
            m[n + j, n + i] = -1.0
            mats.append(m)
    for block, (r0, c0) in (("B", (0, n)), ("C", (n, 0))):
        for i in range(n):
            for j in range(i, n):
                m = np.zeros((two_n, two_n))
                m[r0 + i, c0 + j] = 1.0
                m[r0 + j, c0 + i] = 1.0
                mats.append(m)
    return np.array(mats)


def build_algebra(family: str, params) -> AlgebraDescriptor:
    """Descriptor with the canonical basis of the requested family.

    Families: sl:n, gl:n (n >= 2), so:p,q (p, q >= 1), sp:2n.
    """
    params = tuple(int(p) for p in np.atleast_1d(params))
    if family in ("sl", "gl"):
        if len(params) != 1 or params[0] < 2:
            raise DomainError(f"{family} needs a single parameter n >= 2")
        n = params[0]
        basis = _basis_sl(n) if family == "sl" else _basis_gl(n)
        name = f"{family}({n})"
        defining = n
    elif family == "so":
        if len(params) != 2 or min(params) < 1 or sum(params) < 2:
            raise DomainError("so needs parameters p, q >= 1")
        p, q = params
        basis = _basis_so(p, q)
        name = f"so({p},{q})"
        defining = p + q
    elif family == "sp":
        if len(params) != 1 or params[0] < 2 or params[0] % 2:
            raise DomainError("sp needs a single even parameter 2n >= 2")
        basis = _basis_sp(params[0])
        name = f"sp({params[0]})"
        defining = params[0]
    else:
        raise DomainError(f"unsupported family {family!r}; expected one of {_FAMILIES}")

    desc = AlgebraDescriptor(family, params, defining, basis, name)
    _check_basis(desc)
    return desc


def _check_basis(desc: AlgebraDescriptor):
    rank = np.linalg.matrix_rank(desc._flat, tol=1e-10)
    if rank != desc.dim:
        raise DomainError(f"basis of {desc.name} is linearly dependent")
    # closure under the bracket; raises ConsistencyError on failure
    desc.ad_tensor  # noqa: B018


def parse_algebra(text: str) -> AlgebraDescriptor:
    """Parse "sl:2", "gl:2", "so:1,2", "sp:4" into a descriptor."""
    try:
        family, rest = text.strip().split(":")
        params = [int(v) for v in rest.split(",")]
    except ValueError as exc:
        raise DomainError(f"cannot parse algebra spec {text!r}") from exc
    return build_algebra(family.strip(), params)


# ---------------------------------------------------------------------------
# operations


def bracket(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """[x, y] = xy - yx, expressed in basis coordinates."""
    _same_algebra(x, y)
    ad = x.algebra.ad_tensor
    coords = np.einsum("i,ijk,k->j", x.coords, ad, y.coords)
    return AlgebraElement(x.algebra, coords)


def ad_matrix(x: AlgebraElement) -> np.ndarray:
    """Coordinate matrix of y -> [x, y]."""
    return np.tensordot(x.coords, x.algebra.ad_tensor, axes=1)


def killing(x: AlgebraElement, y: AlgebraElement) -> float:
    """Cartan-Killing form kappa(x, y) = tr(ad x ad y)."""
    _same_algebra(x, y)
    return float(x.coords @ x.algebra.killing_gram @ y.coords)


def adjoint_action(g: GroupElement, x: AlgebraElement) -> AlgebraElement:
    """Ad(g)x = g x g^{-1}, extracted back into basis coordinates."""
    _same_algebra(g, x)
    mat = g.matrix @ x.matrix @ np.linalg.inv(g.matrix)
    return x.algebra.element_from_matrix(mat)


def group_exp(x: AlgebraElement) -> GroupElement:
    return GroupElement(x.algebra, expm(x.matrix), (x,))


def group_identity(algebra: AlgebraDescriptor) -> GroupElement:
    return GroupElement(algebra, np.eye(algebra.defining_dim), ())


def group_product(*gs: GroupElement) -> GroupElement:
    if not gs:
        raise DomainError("empty group product")
    out = gs[0]
    for g in gs[1:]:
        out = out @ g
    return out


def group_inverse(g: GroupElement) -> GroupElement:
    return g.inverse()
