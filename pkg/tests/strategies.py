"""Hypothesis strategies for physically valid SWMHD states."""
import numpy as np
from hypothesis import strategies as st

depth = st.floats(0.1, 5.0)
component = st.floats(-3.0, 3.0)
width = st.floats(0.005, 0.1)


@st.composite
def states(draw, zero_b1=None, zero_b2=None):
    """Primitive state; ``zero_b1``/``zero_b2`` force a vanishing field component."""
    h, v1, v2, B1, B2 = draw(depth), draw(component), draw(component), draw(component), draw(component)
    if zero_b1 if zero_b1 is not None else draw(st.booleans()) and draw(st.integers(0, 3)) == 0:
        B1 = 0.0
    if zero_b2 if zero_b2 is not None else draw(st.booleans()) and draw(st.integers(0, 3)) == 0:
        B2 = 0.0
    return np.array([h, v1, v2, B1, B2])


def magnitude(*ws):
    """Scale for rounding-level comparisons of cubic/quartic expressions."""
    return 1.0 + max(float(np.max(np.abs(w))) for w in ws) ** 4
