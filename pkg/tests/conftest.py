from __future__ import annotations

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from seqfp.config import RunConfig
from seqfp.fingerprint import fingerprint_all
from seqfp.oeis import build_corpus

settings.register_profile("seqfp", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("seqfp")


@pytest.fixture(scope="session")
def fixture_corpus():
    """(sequences, entries) of the bundled corpus at the default 990-term cut."""
    return build_corpus(**RunConfig().sources())


@pytest.fixture(scope="session")
def fixture_rows(fixture_corpus):
    return fingerprint_all(fixture_corpus[0])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# criterion number -> (passed, description); filled by test_acceptance.py
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def verdict():
    def record(number: int, passed: bool, text: str) -> None:
        ACCEPTANCE[number] = (bool(passed), text)
        print(f"{'PASS' if passed else 'FAIL'} criterion {number}: {text}")
        assert passed, text
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, text = ACCEPTANCE[number]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} criterion {number}: {text}")
