import numpy as np
import pytest
from hypothesis import given, strategies as st

from swmhd import mesh
from swmhd.errors import BadGridSpec


def test_regular_grid():
    g = mesh.regular_grid_1d(-1.0, 1.0, 4)
    np.testing.assert_allclose(g.centers, [-0.75, -0.25, 0.25, 0.75])
    assert g.edges[0] == -1.0 and g.edges[-1] == 1.0
    assert g.shape == (4,)


@given(st.integers(2, 500), st.floats(1.0, 20.0))
def test_stretched_grid_tiles_domain(n, ratio):
    g = mesh.stretched_grid_1d(-1.0, 1.0, n, ratio)
    assert g.edges[-1] == 1.0
    assert np.sum(g.widths) == pytest.approx(2.0, rel=1e-13)
    assert np.all(np.diff(g.widths) >= 0)
    assert g.widths[-1] / g.widths[0] == pytest.approx(ratio, rel=1e-10)
    assert np.all(np.diff(g.centers) > 0)


def test_unit_ratio_is_regular():
    np.testing.assert_allclose(mesh.stretched_grid_1d(0, 1, 10, 1.0).widths, 0.1)


@pytest.mark.parametrize("args", [(1.0, -1.0, 10), (0.0, 1.0, 1), (0.0, 1.0, 2.5), (0.0, np.inf, 4)])
def test_bad_1d_specs(args):
    with pytest.raises(BadGridSpec):
        mesh.regular_grid_1d(*args)


def test_bad_ratio():
    with pytest.raises(BadGridSpec):
        mesh.stretched_grid_1d(0, 1, 10, 0.5)


def test_from_widths_rejects_nonpositive():
    with pytest.raises(BadGridSpec):
        mesh.Grid1D.from_widths(0.0, 1.0, [0.5, 0.0, 0.5])


def test_grid_2d():
    g = mesh.regular_grid_2d(((-1, 1), (0, 1)), 4, 2)
    assert g.shape == (4, 2)
    assert g.dx == 0.5 and g.dy == 0.5 and g.cell_area == 0.25
    X, Y = g.mesh()
    assert X.shape == (4, 2)
    assert X[1, 0] == -0.25 and Y[0, 1] == 0.75
    with pytest.raises(BadGridSpec):
        mesh.regular_grid_2d(((0, 1), (1, 0)), 4, 4)
