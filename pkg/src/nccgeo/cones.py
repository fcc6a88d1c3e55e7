"""Invariant cones in q, the tube h + C°, and wedge membership tests.

The minimal cone is generated by the orbit of h under exp(ad h_alg);
membership in the maximal cone is its Killing-form dual test.  Finitely
many orbit samples make the sampled test a slight superset of the true
cone near the boundary, so rank-one structures carry exact closed forms:
extreme rays h +/- z when dim q = 2, and the Lorentzian quadratic test
kappa(x,x) >= 0, kappa(x,h) >= 0 when kappa restricted to q has Lorentz
signature (all so(1,d)).  The gl(2) family C_m from its defining
inequalities is its own exact model.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import ConsistencyError, DomainError
from .grading import SymmetricStructure, symmetric_structure
from .liecore import (
    AlgebraElement,
    GroupElement,
    ad_matrix,
    adjoint_action,
    build_algebra,
)
from .numerics import expm, rng_from_seed, spectral_radius

__all__ = [
    "ConeModel",
    "Gl2ConeModel",
    "build_cone",
    "in_max_cone",
    "in_tube",
    "positivity_member",
    "omega_member",
    "check_causal_euler",
    "gl2_structure",
    "gl2_cone",
]

ORBIT_BOX_RADIUS = 3.0
DEFAULT_SAMPLE_COUNT = 512


def _theta_norm(structure: SymmetricStructure, coords: np.ndarray) -> float:
    """Positive-definite norm sqrt(-kappa(x, theta x))."""
    k = structure.algebra.killing_gram
    val = -coords @ k @ (structure.theta @ coords)
    return float(np.sqrt(max(val, 0.0)))


@dataclass(frozen=True)
class ConeModel:
    """Sampled model of C_q^min / C_q^max with optional exact closed form.

    orbit_coords holds points of exp(ad h_alg)h, h itself first; the
    dual test against them decides membership in the maximal cone.
    exact = "rays" swaps in the self-dual extreme-ray pair and
    exact = "lorentzian" the quadratic form, both free of sampling error.
    """

    structure: SymmetricStructure
    orbit_coords: np.ndarray = field(repr=False)
    sample_count: int
    seed: int
    margin: float = 0.0
    exact: str | None = None
    exact_generators: np.ndarray | None = field(default=None, repr=False)

    @property
    def orbit_samples(self) -> list[AlgebraElement]:
        alg = self.structure.algebra
        return [AlgebraElement(alg, c) for c in self.orbit_coords]

    @cached_property
    def _duals(self) -> np.ndarray:
        if self.exact == "rays":
            return np.asarray(self.exact_generators)
        return self.orbit_coords

    @cached_property
    def _dual_rows(self) -> np.ndarray:
        """Precontracted kappa(dual_i, .) functionals, one per row."""
        return self._duals @ self.structure.algebra.killing_gram

    @cached_property
    def _dual_norms(self) -> np.ndarray:
        return np.array([_theta_norm(self.structure, d) for d in self._duals])

    def contains_coords(self, coords: np.ndarray, interior: bool) -> bool:
        st = self.structure
        nx = _theta_norm(st, coords)
        if self.exact == "lorentzian":
            k = st.algebra.killing_gram
            quad = float(coords @ k @ coords)
            lin = float(coords @ k @ st.h.coords)
            nh = _theta_norm(st, st.h.coords)
            if interior:
                return quad > self.margin * nx * nx and lin > self.margin * nx * nh
            return quad >= -1e-12 * max(1.0, nx * nx) and lin >= -1e-12 * max(
                1.0, nx * nh
            )
        vals = self._dual_rows @ coords
        if interior:
            return bool(np.all(vals > self.margin * self._dual_norms * nx))
        return bool(np.all(vals >= -1e-12 * max(1.0, nx) * self._dual_norms))


@dataclass(frozen=True)
class Gl2ConeModel:
    """The exact gl(2) cone family C_m (m > 0) in coordinates
    x_0*1 + x_1*(h_s + z) + x_{-1}*(h_s - z):

        x_1 >= 0,  x_{-1} >= 0,  x_1 x_{-1} - m x_0^2 >= 0.
    """

    structure: SymmetricStructure
    m: float
    cone_basis: np.ndarray = field(repr=False)  # rows: 1, h_s + z, h_s - z
    margin: float = 0.0

    def cone_coords(self, coords: np.ndarray) -> np.ndarray:
        sol, *_ = np.linalg.lstsq(self.cone_basis.T, coords, rcond=None)
        rebuilt = self.cone_basis.T @ sol
        if np.linalg.norm(rebuilt - coords) > 1e-9 * max(1.0, np.linalg.norm(coords)):
            raise DomainError("element is not in q of gl(2)")
        return sol

    def contains_coords(self, coords: np.ndarray, interior: bool) -> bool:
        x0, x1, xm1 = self.cone_coords(coords)
        scale = max(1.0, abs(x0), abs(x1), abs(xm1))
        det = x1 * xm1 - self.m * x0 * x0
        if interior:
            eps = self.margin * scale
            return x1 > eps and xm1 > eps and det > eps * scale
        return (
            x1 >= -1e-12 * scale
            and xm1 >= -1e-12 * scale
            and det >= -1e-12 * scale * scale
        )


def _detect_exact(structure: SymmetricStructure) -> str | None:
    alg = structure.algebra
    if alg.family == "sl" and alg.defining_dim == 2:
        return "rays"
    if alg.family == "so" and min(alg.params) == 1:
        return "lorentzian"
    return None


def _extreme_rays(structure: SymmetricStructure) -> np.ndarray:
    """Closed-form extreme rays h +/- c u for a rank-one 2-dimensional q."""
    k = structure.algebra.killing_gram
    u = structure.bases["qk"][0]
    h = structure.h.coords
    kh = float(h @ k @ h)
    ku = float(u @ k @ u)
    if ku >= 0 or kh <= 0:
        raise ConsistencyError("q is not Lorentzian; no exact rays")
    c = np.sqrt(-kh / ku)
    return np.array([h + c * u, h - c * u])


def build_cone(
    structure: SymmetricStructure,
    sample_count: int = DEFAULT_SAMPLE_COUNT,
    seed: int = 0,
    margin: float = 0.0,
) -> ConeModel:
    """Sample the generating orbit exp(ad h_alg)h of the minimal cone.

    Coordinates in the orthonormalized h_alg basis are uniform in
    [-R, R], R = 3; h itself is the first sample.  Exact closed forms
    are attached for the rank-one families.
    """
    st = structure
    alg = st.algebra
    h_basis = st.bases["h"]
    q_basis = st.bases["q"]
    rng = rng_from_seed(seed)
    eye = np.eye(alg.dim)

    samples = [st.h.coords]
    draws = rng.uniform(
        -ORBIT_BOX_RADIUS, ORBIT_BOX_RADIUS, size=(sample_count, h_basis.shape[0])
    )
    for row in draws:
        y_coords = row @ h_basis
        ad_y = np.tensordot(y_coords, alg.ad_tensor, axes=1)
        pt = expm(ad_y) @ st.h.coords
        scale = max(1.0, np.linalg.norm(pt))
        q_resid = np.linalg.norm(pt - q_basis.T @ (q_basis @ pt))
        if q_resid > 1e-7 * scale:
            raise ConsistencyError(f"orbit sample left q: residual {q_resid:.3e}")
        a = np.tensordot(pt, alg.ad_tensor, axes=1)
        minpoly = a @ (a - eye) @ (a + eye)
        if np.linalg.norm(minpoly) > 1e-6 * max(1.0, np.linalg.norm(a)) ** 3:
            raise ConsistencyError("orbit sample is not an Euler element")
        samples.append(pt)

    exact = _detect_exact(st)
    rays = _extreme_rays(st) if exact == "rays" else None
    return ConeModel(
        structure=st,
        orbit_coords=np.array(samples),
        sample_count=sample_count,
        seed=seed,
        margin=margin,
        exact=exact,
        exact_generators=rays,
    )


def in_max_cone(x: AlgebraElement, cone, interior: bool = False) -> bool:
    """Dual membership test in C_q^max; x must already lie in q."""
    st = cone.structure
    if not st.in_subspace(x, "q", tol=1e-7):
        raise DomainError("in_max_cone requires an element of q")
    return cone.contains_coords(x.coords, interior)


def in_tube(x: AlgebraElement, cone) -> bool:
    """x in h_alg + C° iff the q-component lies in the open cone."""
    xq = cone.structure.q_part(x)
    return cone.contains_coords(xq.coords, interior=True)


def positivity_member(g: GroupElement, cone) -> bool:
    """gH lies in the positivity domain iff Ad(g)^{-1} h is in the tube."""
    st = cone.structure
    x = adjoint_action(g.inverse(), st.h)
    return in_tube(x, cone)


def omega_member(x: AlgebraElement, structure: SymmetricStructure) -> bool:
    """x in q_k with ad-spectral radius below pi/2 (minus the band)."""
    if not structure.in_subspace(x, "qk"):
        return False
    rho = spectral_radius(ad_matrix(x))
    return rho < np.pi / 2.0 - structure.tols.boundary_band


def check_causal_euler(structure: SymmetricStructure, cone) -> dict:
    """Report on the causal-involution conditions for (h, cone)."""
    st = structure
    h = st.h
    theta_resid = float(np.linalg.norm(st.theta @ h.coords + h.coords))
    tau_resid = float(np.linalg.norm(st.tau - st.tau_h @ st.theta))
    try:
        interior = in_max_cone(h, cone, interior=True)
    except DomainError:
        interior = False
    report = {
        "h_in_cone_interior": {"pass": bool(interior), "residual": 0.0},
        "theta_h_eq_minus_h": {
            "pass": bool(theta_resid <= st.tols.eq_tol * max(1.0, h.norm())),
            "residual": theta_resid,
        },
        "tau_eq_tau_h_theta": {
            "pass": bool(tau_resid <= 1e-10 * st.algebra.dim),
            "residual": tau_resid,
        },
    }
    report["all_pass"] = all(v["pass"] for k, v in report.items() if k != "all_pass")
    return report


# ---------------------------------------------------------------------------
# the gl(2) worked model


def gl2_structure(lam: float) -> SymmetricStructure:
    """Symmetric structure on gl(2) for the Euler element diag(lam, lam-1)."""
    alg = build_algebra("gl", [2])
    h = alg.element_from_matrix(np.diag([lam, lam - 1.0]))
    return symmetric_structure(h)


def gl2_cone(structure: SymmetricStructure, m: float) -> Gl2ConeModel:
    """The cone C_m of the gl(2) family, from its defining inequalities."""
    if structure.algebra.family != "gl" or structure.algebra.defining_dim != 2:
        raise DomainError("gl2_cone needs a gl(2) structure")
    if m <= 0:
        raise DomainError("the cone family C_m requires m > 0")
    alg = structure.algebra
    one = alg.coords_of(np.eye(2))
    h_s = alg.coords_of(np.diag([0.5, -0.5]))
    z = alg.coords_of(0.5 * np.array([[0.0, -1.0], [1.0, 0.0]]))
    basis = np.array([one, h_s + z, h_s - z])
    return Gl2ConeModel(structure=structure, m=float(m), cone_basis=basis)
