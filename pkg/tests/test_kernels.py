"""Parity between the compiled scan kernels and the numpy fallback."""

import numpy as np
import pytest

import nccgeo.desitter as ds
from nccgeo import _kernels_py

compiled = pytest.importorskip("nccgeo._kernels")


@pytest.fixture(scope="module")
def grids():
    return [ds.random_ds_points(d, 1500, seed=40 + d) for d in (2, 3, 5)]


def test_wedge_scan_parity(grids):
    for pts in grids:
        assert np.array_equal(
            compiled.wedge_scan(pts, 1e-6), _kernels_py.wedge_scan(pts, 1e-6)
        )


def test_kms_scan_parity(grids):
    for pts in grids:
        a = compiled.kms_scan(pts, 64, 1e-6, 1e-9)
        b = _kernels_py.kms_scan(pts, 64, 1e-6, 1e-9)
        assert np.array_equal(a, b)


def test_observer_scan_parity(grids):
    for pts in grids:
        a = compiled.observer_scan(pts, 20.0, 400, 1e-9)
        b = _kernels_py.observer_scan(pts, 20.0, 400, 1e-9)
        assert np.array_equal(a, b)


def test_causal_batch_parity(grids):
    pts = grids[1]
    x, y = pts[:-1], pts[1:]
    a = compiled.causal_batch(x, y, 1e-9)
    b = _kernels_py.causal_batch(np.ascontiguousarray(x), np.ascontiguousarray(y), 1e-9)
    assert np.array_equal(a, b)
    # and both agree with the scalar predicate
    for i in range(0, len(x), 97):
        assert bool(a[i]) == ds.causal_leq(x[i], y[i])
