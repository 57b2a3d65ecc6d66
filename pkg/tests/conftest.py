import time

import pytest

_ACCEPTANCE: dict[str, tuple[str, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    start = time.perf_counter()
    outcome = yield
    if item.module.__name__.endswith("test_acceptance") and item.name.startswith("test_criterion_"):
        status = "FAIL" if outcome.excinfo else "PASS"
        _ACCEPTANCE[item.name] = (status, time.perf_counter() - start)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        status, secs = _ACCEPTANCE[name]
        number, _, title = name.removeprefix("test_criterion_").partition("_")
        terminalreporter.write_line(f"{status}  criterion {int(number):2d}  {title.replace('_', ' ')}  ({secs:.1f} s)")
