"""Modular flow on cosets, geodesic classification, wedge factorization.

Cosets are carried by explicit group representatives; equality and the
factorization witness go through quotient charts, which are implemented
for the models where they are explicit (sl(2) and so(1,d)).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cones import in_max_cone, in_tube, positivity_member
from .errors import ConsistencyError, DomainError
from .grading import SymmetricStructure
from .liecore import (
    AlgebraElement,
    GroupElement,
    adjoint_action,
    bracket,
    group_exp,
    group_identity,
)
from .numerics import expm, rng_from_seed, spectral_radius
from .liecore import ad_matrix

__all__ = [
    "CosetPoint",
    "base_point",
    "modular_flow",
    "exp_map",
    "ad_inverse_h",
    "geodesic_orbit_test",
    "in_M_x",
    "geodesic_check",
    "coset_chart",
    "coset_equal",
    "wedge_factor_witness",
]


@dataclass(frozen=True)
class CosetPoint:
    """A point gH of M = G/H, carried by a representative g."""

    structure: SymmetricStructure
    representative: GroupElement


def base_point(structure: SymmetricStructure) -> CosetPoint:
    return CosetPoint(structure, group_identity(structure.algebra))


def modular_flow(t: float, p: CosetPoint) -> CosetPoint:
    """alpha_t(gH) = exp(t h) gH."""
    step = group_exp(float(t) * p.structure.h)
    return CosetPoint(p.structure, step @ p.representative)


def exp_map(structure: SymmetricStructure, x: AlgebraElement) -> CosetPoint:
    """Exp_{eH}(x) = exp(x)H for x in q."""
    if not structure.in_subspace(x, "q"):
        raise DomainError("exp_map requires an element of q")
    return CosetPoint(structure, group_exp(x))


def ad_inverse_h(p: CosetPoint) -> AlgebraElement:
    """Ad(g)^{-1} h for the representative g, the quantity all wedge and
    geodesic tests are built on."""
    return adjoint_action(p.representative.inverse(), p.structure.h)


def geodesic_orbit_test(p: CosetPoint, cone) -> str:
    """Classify the modular-flow orbit through p.

    "causal_geodesic" when Ad(g)^{-1}h lies in q and in the open cone,
    "fixed_point" when it lies in h_alg, "non_geodesic_orbit" otherwise.
    """
    st = p.structure
    x = ad_inverse_h(p)
    if st.in_subspace(x, "q", tol=1e-8):
        if in_max_cone(st.project(x, "q"), cone, interior=True):
            if not geodesic_check(st, x):
                raise ConsistencyError(
                    "cone test and geodesic bracket criterion disagree"
                )
            return "causal_geodesic"
        return "non_geodesic_orbit"
    if st.in_subspace(x, "h", tol=1e-8):
        return "fixed_point"
    return "non_geodesic_orbit"


def in_M_x(p: CosetPoint, x: AlgebraElement) -> bool:
    """True iff Ad(g)^{-1} x lies in q (p belongs to the submanifold M^x)."""
    y = adjoint_action(p.representative.inverse(), x)
    return p.structure.in_subspace(y, "q", tol=1e-8)


def geodesic_check(structure: SymmetricStructure, x: AlgebraElement) -> bool:
    """exp(t x)H is a geodesic iff [x, tau(x)] = 0."""
    br = bracket(x, structure.apply_tau(x))
    return br.norm() <= structure.tols.eq_tol * max(1.0, x.norm()) ** 2


# ---------------------------------------------------------------------------
# explicit coset charts


def _chart_kind(structure: SymmetricStructure) -> str | None:
    alg = structure.algebra
    if alg.family == "sl" and alg.defining_dim == 2:
        return "sl2"
    if alg.family == "so" and alg.params[0] == 1:
        return "so1d"
    if alg.family == "gl" and alg.defining_dim == 2:
        return "gl2"
    return None


def coset_chart(p: CosetPoint) -> np.ndarray:
    """Injective invariant of the coset gH for the explicit models.

    sl(2): Ad(g) applied to the h_alg direction (a point of the adjoint
    one-sheeted hyperboloid); so(1,d): g.e_1 (a point of dS^d);
    gl(2): g I_{1,1} g^T flattened.
    """
    kind = _chart_kind(p.structure)
    g = p.representative.matrix
    if kind == "sl2":
        u0 = AlgebraElement(p.structure.algebra, p.structure.bases["h"][0])
        return adjoint_action(p.representative, u0).coords
    if kind == "so1d":
        return g[:, 1].copy()
    if kind == "gl2":
        i11 = np.diag([1.0, -1.0])
        return (g @ i11 @ g.T).reshape(-1)
    raise DomainError(f"no explicit coset chart for {p.structure.algebra.name}")


def coset_equal(p: CosetPoint, q: CosetPoint, tol: float = 1e-8) -> bool:
    a, b = coset_chart(p), coset_chart(q)
    return bool(np.linalg.norm(a - b) <= tol * max(1.0, np.linalg.norm(a)))


# ---------------------------------------------------------------------------
# wedge factorization witness


def _witness_residual(structure, s, omega_coords, target):
    alg = structure.algebra
    qk = structure.bases["qk"]
    g0 = group_exp(s * structure.h)
    x = AlgebraElement(alg, omega_coords @ qk)
    cand = CosetPoint(structure, g0 @ group_exp(x))
    return coset_chart(cand) - target, g0, x


def wedge_factor_witness(p: CosetPoint, cone, seed: int = 0, max_iter: int = 100):
    """Solve p = g0 . Exp(x) with g0 in G^h_e and x in Omega_{q_k}.

    Damped Gauss-Newton on the chart residual, with random restarts
    drawn from the seed; returns (g0, x) or None when the solver fails
    or the solution falls outside the spectral-radius bound.
    """
    st = p.structure
    if _chart_kind(st) not in ("sl2", "so1d"):
        raise DomainError("witness solver needs an explicit coset chart")
    if not positivity_member(p.representative, cone):
        raise DomainError("witness requires a point of the positivity domain")

    target = coset_chart(p)
    rng = rng_from_seed(seed)
    n_omega = st.bases["qk"].shape[0]

    def solve(theta0):
        theta = np.array(theta0, dtype=float)
        for _ in range(max_iter):
            res, _, _ = _witness_residual(st, theta[0], theta[1:], target)
            if np.linalg.norm(res) < 1e-12 * max(1.0, np.linalg.norm(target)):
                return theta
            jac = np.empty((len(res), len(theta)))
            eps = 1e-7
            for j in range(len(theta)):
                shifted = theta.copy()
                shifted[j] += eps
                res_j, _, _ = _witness_residual(st, shifted[0], shifted[1:], target)
                jac[:, j] = (res_j - res) / eps
            step, *_ = np.linalg.lstsq(jac, -res, rcond=None)
            if not np.all(np.isfinite(step)):
                return None
            # damped update
            lam = 1.0
            base = np.linalg.norm(res)
            for _ in range(30):
                cand = theta + lam * step
                res_c, _, _ = _witness_residual(st, cand[0], cand[1:], target)
                if np.linalg.norm(res_c) < base:
                    theta = cand
                    break
                lam *= 0.5
            else:
                return None
            if np.linalg.norm(lam * step) < 1e-13:
                res, _, _ = _witness_residual(st, theta[0], theta[1:], target)
                if np.linalg.norm(res) < 1e-9 * max(1.0, np.linalg.norm(target)):
                    return theta
                return None
        res, _, _ = _witness_residual(st, theta[0], theta[1:], target)
        if np.linalg.norm(res) < 1e-9 * max(1.0, np.linalg.norm(target)):
            return theta
        return None

    starts = [np.zeros(1 + n_omega)]
    for _ in range(8):
        starts.append(
            np.concatenate(
                [rng.uniform(-2.0, 2.0, 1), rng.uniform(-1.4, 1.4, n_omega)]
            )
        )
    for theta0 in starts:
        theta = solve(theta0)
        if theta is None:
            continue
        _, g0, x = _witness_residual(st, theta[0], theta[1:], target)
        if spectral_radius(ad_matrix(x)) < np.pi / 2.0:
            return g0, x
    return None
