import os
from contextlib import contextmanager

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=500,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_RESULTS: dict = {}


class Criterion:
    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title
        self.failed: list = []
        self.passed: list = []

    def check(self, name: str, ok: bool):
        (self.passed if ok else self.failed).append(name)
        return ok


@pytest.fixture
def criterion():
    """``with criterion(n, title) as c: c.check(name, bool)``; records one PASS/FAIL line."""

    @contextmanager
    def open_criterion(number: int, title: str):
        c = Criterion(number, title)
        try:
            yield c
        except Exception as exc:
            c.failed.append(f"error: {type(exc).__name__}: {exc}")
        _RESULTS[number] = c
        assert not c.failed, f"criterion {number} failed: {c.failed}"

    return open_criterion


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_RESULTS):
        c = _RESULTS[n]
        status = "FAIL" if c.failed else "PASS"
        tr.write_line(f"[{status}] criterion {n}: {c.title} ({len(c.passed)} checks passed, {len(c.failed)} failed)")
        for name in c.failed[:5]:
            tr.write_line(f"         failed: {name}")
        if len(c.failed) > 5:
            tr.write_line(f"         ... and {len(c.failed) - 5} more")
