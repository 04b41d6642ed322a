from __future__ import annotations

import pytest

from schubres.diagram import PRESETS, build_diagram
from schubres.orbit import orbit_poset

# criterion number -> (title, "PASS" | "FAIL"), filled by test_acceptance
ACCEPTANCE_RESULTS: dict[int, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def e6():
    return build_diagram(*PRESETS["e6"])


@pytest.fixture(scope="session")
def e7():
    return build_diagram(*PRESETS["e7"])


@pytest.fixture(scope="session")
def e8():
    return build_diagram(*PRESETS["e8"])


@pytest.fixture(scope="session")
def posets():
    cache = {}

    def get(key):
        if key not in cache:
            cache[key] = orbit_poset(build_diagram(*PRESETS[key]))
        return cache[key]

    return get


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        title, status = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {title}")
