import sys

import numpy as np
import pytest
from hypothesis import assume
from hypothesis import strategies as st

from epstein_kit.riemann_sphere import MobiusMap, RoundDisk

finite = st.floats(-3.0, 3.0, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, finite, finite)
heights = st.floats(0.05, 4.0)


@st.composite
def mobius_maps(draw):
    a, b, c, d = (draw(complexes) for _ in range(4))
    a, d = a + 1, d + 1
    assume(abs(a * d - b * c) > 0.1)
    return MobiusMap(a, b, c, d)


@st.composite
def round_disks(draw):
    kind = draw(st.sampled_from(["inside", "outside", "half"]))
    if kind == "half":
        p = draw(complexes)
        ang = draw(st.floats(0, 2 * np.pi))
        return RoundDisk.half_plane(p, np.exp(1j * ang))
    c = draw(complexes)
    r = draw(st.floats(0.2, 3.0))
    return RoundDisk.circle(c, r, inside=(kind == "inside"))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    # one line per acceptance criterion that ran
    module = next((m for name, m in list(sys.modules.items()) if name.endswith("test_acceptance")), None)
    results = getattr(module, "RESULTS", {})
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
