import pytest
from hypothesis import HealthCheck, settings, strategies as st

from repmeasure.corpus import default_corpus

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def words(alphabet="abc", min_size=1, max_size=24):
    return st.text(alphabet=alphabet, min_size=min_size, max_size=max_size).map(str.encode)


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()


# one PASS/FAIL line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
