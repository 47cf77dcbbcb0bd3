import os

import pytest
from hypothesis import HealthCheck, settings

from recipcircle import _kernels_py, kernels

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

BACKENDS = [pytest.param(_kernels_py, id="python")]
if kernels.compiled is not None:
    BACKENDS.append(pytest.param(kernels.compiled, id="cython"))
else:  # pragma: no cover
    BACKENDS.append(pytest.param(None, id="cython", marks=pytest.mark.skip("extension not built")))


@pytest.fixture(params=BACKENDS)
def backend(request):
    """Each kernel implementation in turn."""
    return request.param


ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
