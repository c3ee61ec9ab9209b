import functools

import pytest

from sixspheres.enumerator import EnumerationRequest, census_maps, enumerate as enumerate_records


@functools.lru_cache(maxsize=None)
def census(n):
    return census_maps(n)


@functools.lru_cache(maxsize=None)
def corpus(max_n):
    return tuple(enumerate_records(EnumerationRequest(max_n=max_n)))


@pytest.fixture(scope="session")
def corpus12():
    return corpus(12)


@pytest.fixture(scope="session")
def corpus14():
    return corpus(14)


# one line per acceptance criterion, printed in the terminal summary
CRITERIA_LINES = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
