import os
import sys
import random

import pytest
from hypothesis import HealthCheck, settings

from twinrep.suite import DEFAULT_SEED

settings.register_profile(
    "twinrep",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("twinrep")


@pytest.fixture
def seed():
    raw = os.environ.get("TWINREP_SEED")
    return int(raw) if raw else DEFAULT_SEED


@pytest.fixture
def rng(seed):
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
