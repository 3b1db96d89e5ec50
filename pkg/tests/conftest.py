import pytest

_RESULTS_KEY = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_RESULTS_KEY] = {}


@pytest.fixture
def acceptance(request):
    """Record ``(number, passed, detail)`` for the end-of-run summary."""
    results = request.config.stash[_RESULTS_KEY]

    def record(number: int, title: str, passed: bool, detail: str) -> None:
        results[number] = (title, passed, detail)
        print(f"criterion {number} [{'PASS' if passed else 'FAIL'}] {title}: {detail}")

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS_KEY, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, passed, detail = results[number]
        terminalreporter.write_line(f"criterion {number} {'PASS' if passed else 'FAIL'}: {title} ({detail})")
