import numpy as np
import pytest
from hypothesis import given, settings

from strategies import states
from swmhd import physics
from swmhd.errors import NonPositiveDepth
from swmhd.physics import Axis, SWAP


def test_non_positive_depth_rejected():
    with pytest.raises(NonPositiveDepth):
        physics.primitive_from_conserved([0, 1, 0, 0, 0])
    with pytest.raises(NonPositiveDepth):
        physics.conserved_from_primitive([-1, 0, 0, 0, 0])
    with pytest.raises(NonPositiveDepth):
        physics.conserved_from_entropy_variables([-1, 0, 0, 0, 0])
    with pytest.raises(NonPositiveDepth):
        physics.entropy_jacobian([1e-14, 0, 0, 0, 0])


def test_rest_state_values():
    assert np.allclose(physics.primitive_from_conserved([1, 0, 0, 1, 0]), [1, 0, 0, 1, 0])
    np.testing.assert_allclose(physics.entropy_variables([1, 0, 0, 0, 0]), [1, 0, 0, 0, 0])
    np.testing.assert_allclose(physics.conserved_from_entropy_variables([1, 0, 0, 0, 0]), [1, 0, 0, 0, 0])
    for h in (0.3, 2.0):
        np.testing.assert_allclose(physics.physical_flux([h, 0, 0, 0, 0], 2.0), [0, h * h, 0, 0, 0])
        assert physics.entropy([h, 0, 0, 0, 0], 3.0) == pytest.approx(1.5 * h * h)
    assert physics.entropy_flux([1, 0, 0, 1, 0]) == 0.0
    assert physics.entropy_potential([1, 0, 0, 1, 0]) == 0.0


def test_flux_jacobian_fourth_row_vanishes():
    A = physics.flux_jacobian([1.3, 0.2, -0.4, 0.9, 1.1], 1.0)
    assert np.all(A[3] == 0.0)


def test_batched_shapes():
    rng = np.random.default_rng(1)
    w = np.stack([rng.uniform(0.5, 2, (3, 4))] + [rng.uniform(-1, 1, (3, 4)) for _ in range(4)])
    assert physics.physical_flux(w).shape == (5, 3, 4)
    assert physics.entropy(w).shape == (3, 4)
    assert physics.entropy_jacobian(w).shape == (5, 5, 3, 4)
    np.testing.assert_allclose(physics.entropy_jacobian(w)[:, :, 1, 2],
                               physics.entropy_jacobian(w[:, 1, 2]))


@given(states())
def test_conserved_roundtrip(w):
    u = physics.conserved_from_primitive(w)
    np.testing.assert_allclose(physics.primitive_from_conserved(u), w, rtol=1e-14, atol=1e-14)


@given(states())
def test_entropy_variable_roundtrip(w):
    u = physics.conserved_from_entropy_variables(physics.entropy_variables(w, 1.7), 1.7)
    np.testing.assert_allclose(u, physics.conserved_from_primitive(w), rtol=1e-12, atol=1e-12)


@given(states())
def test_entropy_jacobian_spd_and_inverse(w):
    H = physics.entropy_jacobian(w, 1.0)
    Hi = physics.entropy_jacobian_inverse(w, 1.0)
    assert np.array_equal(H, H.T) and np.array_equal(Hi, Hi.T)
    assert np.all(np.linalg.eigvalsh(H) > 0)
    np.testing.assert_allclose(H @ Hi, np.eye(5), atol=1e-12 * np.max(np.abs(H)) * np.max(np.abs(Hi)))


@given(states())
def test_entropy_potential_identity(w):
    for axis in Axis:
        q = physics.entropy_variables(w)
        ref = q @ physics.physical_flux(w, 1.0, axis) - physics.entropy_flux(w, 1.0, axis)
        assert physics.entropy_potential(w, 1.0, axis) == pytest.approx(ref, abs=1e-12 * (1 + np.max(np.abs(w)) ** 4))


@settings(max_examples=50)
@given(states())
def test_flux_jacobian_is_derivative(w):
    u = physics.conserved_from_primitive(w)
    eps = 1e-6
    fd = np.empty((5, 5))
    for k in range(5):
        du = np.zeros(5)
        du[k] = eps
        fd[:, k] = (physics.physical_flux(physics.primitive_from_conserved(u + du))
                    - physics.physical_flux(physics.primitive_from_conserved(u - du))) / (2 * eps)
    np.testing.assert_allclose(physics.flux_jacobian(w), fd, rtol=1e-5, atol=1e-5 * (1 + np.max(np.abs(w)) ** 2))


@given(states())
def test_y_quantities_are_swapped_x_quantities(w):
    ws = w[list(SWAP)]
    np.testing.assert_allclose(physics.physical_flux(w, 1.0, Axis.Y),
                               physics.physical_flux(ws, 1.0, Axis.X)[list(SWAP)], atol=1e-14)
    assert physics.entropy_flux(w, 1.0, Axis.Y) == pytest.approx(physics.entropy_flux(ws, 1.0, Axis.X), abs=1e-12)
    assert physics.entropy_potential(w, 1.0, Axis.Y) == pytest.approx(
        physics.entropy_potential(ws, 1.0, Axis.X), abs=1e-12)


def test_axis_coercion():
    assert physics.as_axis("y") is Axis.Y
    assert physics.as_axis(0) is Axis.X
