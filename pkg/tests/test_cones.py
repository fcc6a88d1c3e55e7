import numpy as np
import pytest

from nccgeo.cones import (
    build_cone,
    check_causal_euler,
    gl2_cone,
    gl2_structure,
    in_max_cone,
    in_tube,
    omega_member,
    positivity_member,
)
from nccgeo.errors import DomainError
from nccgeo.grading import symmetric_structure
from nccgeo.liecore import adjoint_action, group_exp, group_product, killing
from nccgeo.numerics import rng_from_seed


def test_orbit_samples_lie_on_the_hyperbola(sl2):
    # exp(t ad h_0) h = cosh(t) h + sinh(t) z: kappa is preserved and the
    # h-coefficient stays >= 1
    cone = sl2.cone
    k_hh = killing(sl2.h, sl2.h)
    assert np.allclose(cone.orbit_coords[0], sl2.h.coords)
    for s in cone.orbit_samples[1:50]:
        assert abs(killing(s, s) - k_hh) < 1e-8
        vec = sl2.vector_from_element(s)
        assert vec[2] >= 1.0 - 1e-9  # cosh >= 1
        assert abs(vec[1]) < 1e-8  # no h_0 component
        assert abs(vec[2] ** 2 - vec[0] ** 2 - 1.0) < 1e-8


def test_exact_generators_sl2(sl2):
    gens = sl2.cone.exact_generators
    expected = {tuple(np.round((sl2.h + sl2.z).coords, 9)), tuple(np.round((sl2.h - sl2.z).coords, 9))}
    got = {tuple(np.round(g, 9)) for g in gens}
    assert got == expected


def test_in_max_cone_examples(sl2):
    assert in_max_cone(sl2.h, sl2.cone, interior=True)
    assert killing(sl2.z, sl2.z) == pytest.approx(-2.0)
    assert not in_max_cone(sl2.z, sl2.cone)
    assert in_max_cone(sl2.h + sl2.z, sl2.cone)
    assert not in_max_cone(sl2.h + sl2.z, sl2.cone, interior=True)


def test_in_max_cone_requires_q(sl2):
    with pytest.raises(DomainError):
        in_max_cone(sl2.h0, sl2.cone)


def test_in_tube_examples(sl2):
    assert in_tube(sl2.h, sl2.cone)
    assert in_tube(sl2.h + 3.0 * sl2.h0, sl2.cone)
    for t in np.linspace(-3.0, 3.0, 61):
        x = np.cos(t) * sl2.h - np.sin(t) * sl2.h0
        assert in_tube(x, sl2.cone) == (np.cos(t) > 1e-9)


def test_positivity_member_examples(sl2):
    from nccgeo.liecore import group_identity

    assert positivity_member(group_identity(sl2.algebra), sl2.cone)
    for t in (0.3, 1.2, 1.5):
        assert positivity_member(group_exp(t * sl2.z), sl2.cone)
    for t in (1.6, 2.5, 3.1):
        assert not positivity_member(group_exp(t * sl2.z), sl2.cone)


def test_omega_member(sl2):
    st = sl2.structure
    assert omega_member(0.0 * sl2.z, st)
    assert omega_member(1.0 * sl2.z, st)
    assert not omega_member((np.pi / 2) * sl2.z, st)
    assert not omega_member(0.3 * sl2.h, st)  # not in q_k


def test_check_causal_euler(sl2):
    assert check_causal_euler(sl2.structure, sl2.cone)["all_pass"]
    st_neg = symmetric_structure(-1 * sl2.h)
    report = check_causal_euler(st_neg, sl2.cone)
    assert not report["h_in_cone_interior"]["pass"]


def test_ad_invariance_of_membership(sl2, rng):
    for _ in range(40):
        c = rng.uniform(0.2, 2.0)
        d = rng.uniform(-0.85, 0.85) * c
        x = c * sl2.h + d * sl2.z
        assert in_max_cone(x, sl2.cone)
        g = group_exp(rng.uniform(-2.0, 2.0) * sl2.h0)
        assert in_max_cone(adjoint_action(g, x), sl2.cone)


def test_duality_sanity(sl2):
    coords = sl2.cone.orbit_coords[:60]
    gram = coords @ sl2.algebra.killing_gram @ coords.T
    assert gram.min() >= -1e-8


def test_sampled_cone_matches_lorentzian_form_away_from_boundary(sl2):
    from dataclasses import replace

    sampled = replace(sl2.cone, exact=None, exact_generators=None)
    for c in np.linspace(-2, 2, 41):
        for d in np.linspace(-2, 2, 41):
            if abs(c - abs(d)) < 1e-3:
                continue
            x = c * sl2.h + d * sl2.z
            assert sampled.contains_coords(x.coords, False) == (c >= abs(d))


def test_wedge_invariance_under_flow_and_H(sl2):
    rng = rng_from_seed(17)
    for _ in range(15):
        t = rng.uniform(-1.4, 1.4)
        g = group_exp(t * sl2.z)
        assert positivity_member(g, sl2.cone)
        for s in (-2.0, 0.5, 1.0):
            k = group_exp(rng.uniform(-1.0, 1.0) * sl2.h0)
            moved = group_product(group_exp(s * sl2.h), g, k)
            assert positivity_member(moved, sl2.cone)


# ---------------------------------------------------------------------------
# the gl(2) family


def test_gl2_structure_shape():
    st = gl2_structure(0.6)
    assert st.grading.dims == (1, 2, 1)
    assert st.dim("q") == 3 and st.dim("h") == 1


def test_gl2_cone_membership():
    st = gl2_structure(0.75)
    cone = gl2_cone(st, 0.25)
    # h = (lam+mu)/2 * 1 + h_s must be interior when m (lam+mu)^2 < 1
    assert in_max_cone(st.h, cone, interior=True)
    report = check_causal_euler(st, cone)
    assert report["all_pass"]


def test_gl2_cone_rejects_too_central_h():
    st = gl2_structure(1.4)  # lam + mu = 1.8, m = 1: m (lam+mu)^2 > 1
    cone = gl2_cone(st, 1.0)
    assert not check_causal_euler(st, cone)["h_in_cone_interior"]["pass"]


@pytest.mark.parametrize("m,lam", [(0.25, 0.75), (1.0, 0.6), (1.0, 0.9)])
def test_gl2_positivity_transition(m, lam):
    st = gl2_structure(lam)
    cone = gl2_cone(st, m)
    z = st.algebra.element_from_matrix(0.5 * np.array([[0.0, -1.0], [1.0, 0.0]]))
    lo, hi = 0.0, np.pi / 2
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if positivity_member(group_exp(mid * z), cone):
            lo = mid
        else:
            hi = mid
    target = np.arccos(np.sqrt(m) * abs(2 * lam - 1.0))
    assert abs(0.5 * (lo + hi) - target) < 1e-6


def test_gl2_canonical_order_cone_is_psd(rng):
    # for m = 1 the forward set matches positive semidefiniteness of
    # x I_{1,1} + I_{1,1} x^T
    st = gl2_structure(0.6)
    cone = gl2_cone(st, 1.0)
    i11 = np.diag([1.0, -1.0])
    qb = st.bases["q"]
    for _ in range(300):
        x = st.algebra.element(rng.normal(size=4) @ (qb.T @ qb))
        tangent = x.matrix @ i11 + i11 @ x.matrix.T
        psd = np.linalg.eigvalsh(0.5 * (tangent + tangent.T)).min() >= -1e-9
        member = cone.contains_coords(x.coords, False)
        margin = abs(np.linalg.eigvalsh(0.5 * (tangent + tangent.T)).min())
        if margin > 1e-7:
            assert member == psd
