import numpy as np
import pytest

import comax


def test_single_component_fixture():
    rep = comax.solve_single_spca(np.array([[3.0, -1.0, 2.0]]), s=2)
    assert rep["value"] == pytest.approx(13.0, rel=1e-9)
    assert rep["support"] == [0, 2]


def test_nonnegative_and_plain_agree_on_perron():
    a = np.array([[1.0, 0.7], [0.0, 0.5]])
    plain = comax.solve_single_spca(a, s=2)
    nn = comax.solve_nn_spca(a, s=2)
    assert nn["value"] == pytest.approx(plain["value"], rel=1e-8)


def test_sphere_quadratic_linear():
    rep = comax.solve_sphere_quadratic_linear(
        np.array([[3.0, -1.0, 2.0]]), np.zeros(3), s=2
    )
    assert rep["value"] == pytest.approx(13.0, rel=1e-8)


def test_multi_component_trace():
    a = np.array([[2.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
    rep = comax.solve_multi_spca(a, s=2, d=2)
    sigma = a.T @ a
    expected = sigma[0, 0] + sigma[2, 2]  # top two column norms
    assert rep["value"] == pytest.approx(expected, rel=1e-8)


def test_disjoint_components():
    rep = comax.solve_disjoint_spca(np.array([[1.0, 2.0]]), caps=[1, 1])
    assert rep["value"] == pytest.approx(5.0, rel=1e-9)
    z = np.asarray(rep["assignment"])
    assert z.shape == (2, 3)
    assert (z.sum(axis=1) == 1).all()


def test_comonotone_checker():
    yes = comax.check_comonotone([np.array([1.0, 1.0, 0.0]),
                                  np.array([1.0, 0.0, 1.0]),
                                  np.array([0.0, 1.0, 1.0])])
    assert yes["yes"]

    chain = comax.check_comonotone([np.zeros(3),
                                    np.array([1.0, 0.0, 0.0]),
                                    np.array([1.0, 1.0, 0.0]),
                                    np.ones(3)])
    assert not chain["yes"]
    assert list(chain["witness_v"]) == [-2.0, 3.0, -1.0]


def test_ky_fan():
    m = np.diag([3.0, 2.0, 1.0])
    assert comax.ky_fan(m, 2) == pytest.approx(5.0, rel=1e-12)
