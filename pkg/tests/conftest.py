import numpy as np
import pytest

from popuc import VerblunskySequence, eta


@pytest.fixture(scope="session", autouse=True)
def warm_kernel():
    # compile the jitted phase kernel once so timed tests measure algorithm
    # cost, not JIT latency
    eta(VerblunskySequence.constant(-0.1), 3, 0.5)
    yield


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
