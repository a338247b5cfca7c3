import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

# acceptance summary: one line per criterion

_criteria: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    key = (marker.args[0], marker.args[1])
    ok = _criteria.get(key, True)
    if rep.when == "call" or rep.failed:
        _criteria[key] = ok and rep.passed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (n, title), ok in sorted(_criteria.items()):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {title}")
