import numpy as np
import pytest

from nccgeo.cones import build_cone, positivity_member
from nccgeo.errors import DomainError
from nccgeo.flows import (
    CosetPoint,
    ad_inverse_h,
    base_point,
    coset_chart,
    coset_equal,
    exp_map,
    geodesic_check,
    geodesic_orbit_test,
    in_M_x,
    modular_flow,
    wedge_factor_witness,
)
from nccgeo.grading import canonical_euler, symmetric_structure
from nccgeo.liecore import ad_matrix, build_algebra, group_exp, group_product
from nccgeo.numerics import rng_from_seed, spectral_radius


def test_modular_flow_basics(sl2):
    p = base_point(sl2.structure)
    assert coset_equal(modular_flow(0.0, p), p)
    # one-parameter group property
    q1 = modular_flow(0.7, modular_flow(-1.2, p))
    q2 = modular_flow(-0.5, p)
    assert np.linalg.norm(q1.representative.matrix - q2.representative.matrix) < 1e-10
    # the flow through the base point fixes h
    for t in (0.5, 2.0):
        assert (ad_inverse_h(modular_flow(t, p)) - sl2.h).norm() < 1e-10


def test_exp_map(sl2):
    st = sl2.structure
    assert coset_equal(exp_map(st, 0.0 * sl2.z), base_point(st))
    assert coset_equal(exp_map(st, 0.8 * sl2.h), modular_flow(0.8, base_point(st)))
    with pytest.raises(DomainError):
        exp_map(st, sl2.h0)  # h_0 lies in h_alg, not q
    # rotation formula: Ad(exp(tz))^{-1} h = cos(t) h - sin(t) h_0
    for t in (0.3, 1.0, 2.5):
        x = ad_inverse_h(exp_map(st, t * sl2.z))
        expected = np.cos(t) * sl2.h - np.sin(t) * sl2.h0
        assert (x - expected).norm() < 1e-10


def test_geodesic_orbit_classification(sl2):
    st, cone = sl2.structure, sl2.cone
    assert geodesic_orbit_test(base_point(st), cone) == "causal_geodesic"
    assert geodesic_orbit_test(exp_map(st, (np.pi / 2) * sl2.z), cone) == "fixed_point"
    assert geodesic_orbit_test(exp_map(st, 0.3 * sl2.z), cone) == "non_geodesic_orbit"


def test_in_M_x(sl2):
    st = sl2.structure
    assert in_M_x(base_point(st), sl2.h)
    assert not in_M_x(exp_map(st, 0.5 * sl2.z), sl2.h)
    assert in_M_x(exp_map(st, np.pi * sl2.z), sl2.h)
    # commuting directions stay inside M^x
    assert in_M_x(exp_map(st, 1.3 * sl2.h), sl2.h)


def test_geodesic_check(sl2):
    st = sl2.structure
    assert geodesic_check(st, sl2.h)  # q
    assert geodesic_check(st, sl2.h0)  # h_alg
    assert not geodesic_check(st, sl2.h + 0.5 * sl2.h0)


def test_wedge_flow_invariance(sl2, rng):
    st, cone = sl2.structure, sl2.cone
    for _ in range(12):
        p = sl2.coset_from_angles(rng.uniform(-2, 2), rng.uniform(-1.3, 1.3))
        if not positivity_member(p.representative, cone):
            continue
        for t in (-2.0, -1.0, -0.5, 0.5, 1.0, 2.0):
            assert positivity_member(modular_flow(t, p).representative, cone)


def test_geodesic_consistency_with_cone_route(sl2, rng):
    st, cone = sl2.structure, sl2.cone
    for _ in range(20):
        p = sl2.coset_from_angles(rng.uniform(-1, 1), rng.uniform(-3, 3))
        if geodesic_orbit_test(p, cone) == "causal_geodesic":
            assert geodesic_check(st, ad_inverse_h(p))


def test_witness_at_base_point(sl2):
    res = wedge_factor_witness(base_point(sl2.structure), sl2.cone, seed=0)
    assert res is not None
    g0, x = res
    assert x.norm() < 1e-9
    assert np.allclose(g0.matrix, np.eye(2), atol=1e-9)


def test_witness_on_rotation_points(sl2):
    st, cone = sl2.structure, sl2.cone
    for t in (0.2, -0.9, 1.3):
        p = exp_map(st, t * sl2.z)
        res = wedge_factor_witness(p, cone, seed=3)
        assert res is not None
        g0, x = res
        rebuilt = CosetPoint(st, group_product(g0, group_exp(x)))
        assert coset_equal(rebuilt, p, tol=1e-7)
        assert spectral_radius(ad_matrix(x)) == pytest.approx(abs(t), abs=1e-7)


def test_witness_requires_wedge_point(sl2):
    p = exp_map(sl2.structure, 2.5 * sl2.z)  # outside Omega
    with pytest.raises(DomainError):
        wedge_factor_witness(p, sl2.cone, seed=0)


def test_witness_so12():
    alg = build_algebra("so", [1, 2])
    st = symmetric_structure(canonical_euler(alg, "boost"))
    cone = build_cone(st, sample_count=64, seed=0)
    rot = st.rotation_generators[0]
    p = exp_map(st, 0.7 * rot)
    res = wedge_factor_witness(p, cone, seed=1)
    assert res is not None
    g0, x = res
    rebuilt = CosetPoint(st, group_product(g0, group_exp(x)))
    assert coset_equal(rebuilt, p, tol=1e-7)


def test_transitivity_on_modular_geodesics(sl2):
    # G^h acts transitively on the causal-geodesic set at rank one
    st, cone = sl2.structure, sl2.cone
    rng = rng_from_seed(11)
    for _ in range(8):
        a, b = rng.uniform(-1.5, 1.5, 2)
        p, q = exp_map(st, a * sl2.h), exp_map(st, b * sl2.h)
        assert geodesic_orbit_test(p, cone) == "causal_geodesic"
        k = group_exp((b - a) * sl2.h)
        moved = CosetPoint(st, group_product(k, p.representative))
        assert coset_equal(moved, q, tol=1e-6)


def test_chart_unavailable_for_general_algebra(sl3_structure):
    p = base_point(sl3_structure)
    with pytest.raises(DomainError):
        coset_chart(p)
