"""Bridge between the explicit dS^2 model and the sl(2) realization.

sl(2) with the Killing form is 3-dimensional Minkowski space: in the
basis identification

    e_0 -> z = (f - e)/2,   e_1 -> h_0 = (e + f)/2,   e_2 -> h,

a Minkowski vector (x_0, x_1, x_2) corresponds to the algebra element
x_0 z + x_1 h_0 + x_2 h, the de Sitter quadric to the sheet of Euler
elements, and the coset gH to the orbit point Ad(g) h_0.  The wedge
membership of a dS point then matches the tube test on the algebra
side; both routes are exercised against each other by the acceptance
suite.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cones import ConeModel, build_cone
from .flows import CosetPoint
from .grading import SymmetricStructure, canonical_euler, symmetric_structure
from .liecore import (
    AlgebraDescriptor,
    AlgebraElement,
    GroupElement,
    build_algebra,
    group_exp,
    group_product,
)

__all__ = ["Sl2Model", "sl2_model", "ds2_grid", "ds2_point"]


@dataclass(frozen=True)
class Sl2Model:
    algebra: AlgebraDescriptor
    structure: SymmetricStructure
    cone: ConeModel
    h: AlgebraElement
    h0: AlgebraElement
    z: AlgebraElement
    e: AlgebraElement
    f: AlgebraElement

    def element_from_vector(self, x) -> AlgebraElement:
        x = np.asarray(x, dtype=float)
        return x[0] * self.z + x[1] * self.h0 + x[2] * self.h

    def vector_from_element(self, el: AlgebraElement) -> np.ndarray:
        basis = np.array([self.z.coords, self.h0.coords, self.h.coords])
        sol, *_ = np.linalg.lstsq(basis.T, el.coords, rcond=None)
        return sol

    def rep_from_angles(self, u: float, phi: float) -> GroupElement:
        """Representative g with Ad(g) h_0 = (sinh u, cosh u cos phi,
        cosh u sin phi) in the vector identification."""
        return group_product(group_exp(-phi * self.z), group_exp(-u * self.h))

    def coset_from_angles(self, u: float, phi: float) -> CosetPoint:
        return CosetPoint(self.structure, self.rep_from_angles(u, phi))


def sl2_model(sample_count: int = 512, seed: int = 0) -> Sl2Model:
    alg = build_algebra("sl", [2])
    h = canonical_euler(alg, "h1")
    st = symmetric_structure(h)
    cone = build_cone(st, sample_count=sample_count, seed=seed)
    e = alg.element_from_matrix(np.array([[0.0, 1.0], [0.0, 0.0]]))
    f = alg.element_from_matrix(np.array([[0.0, 0.0], [1.0, 0.0]]))
    h0 = 0.5 * (e + f)
    z = 0.5 * (f - e)
    return Sl2Model(alg, st, cone, h, h0, z, e, f)


def ds2_point(u: float, phi: float) -> np.ndarray:
    return np.array([np.sinh(u), np.cosh(u) * np.cos(phi), np.cosh(u) * np.sin(phi)])


def ds2_grid(n_boost: int, n_angle: int, boost_range: float = 3.0):
    """Boost x rotation grid on dS^2; returns (points, (u, phi) pairs)."""
    u_vals = np.linspace(-boost_range, boost_range, n_boost)
    phi_vals = np.linspace(0.0, 2.0 * np.pi, n_angle, endpoint=False)
    uu, pp = np.meshgrid(u_vals, phi_vals, indexing="ij")
    u_flat, p_flat = uu.ravel(), pp.ravel()
    pts = np.column_stack(
        [np.sinh(u_flat), np.cosh(u_flat) * np.cos(p_flat), np.cosh(u_flat) * np.sin(p_flat)]
    )
    return pts, np.column_stack([u_flat, p_flat])
