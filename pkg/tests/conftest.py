import contextlib
import time

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile("default")

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Context manager recording one acceptance line: ``with criterion("3", "..."):``."""

    @contextlib.contextmanager
    def record(label, description):
        t0 = time.perf_counter()
        try:
            yield
        except BaseException as e:
            _ACCEPTANCE.append((label, False, f"{description} ({time.perf_counter() - t0:.1f}s): {type(e).__name__}: {e}"))
            raise
        _ACCEPTANCE.append((label, True, f"{description} ({time.perf_counter() - t0:.1f}s)"))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, text in _ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {label}: {text}")
