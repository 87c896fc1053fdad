import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from swknot.laurent import LaurentPoly  # noqa: E402

polys = st.dictionaries(
    st.integers(-8, 8), st.integers(-9, 9), max_size=8
).map(LaurentPoly)

nonzero_ints = st.integers(-4, 4).filter(bool)


@pytest.fixture
def P():
    return LaurentPoly.parse


TREFOIL = "t^-1 - 1 + t"
FIGURE8 = "-t^-1 + 3 - t"
T25 = "t^-2 - t^-1 + 1 - t + t^2"
