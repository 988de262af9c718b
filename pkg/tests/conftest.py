import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=100, deadline=None, derandomize=True)
settings.load_profile("default")

_ACCEPT = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    lines = request.config.stash.setdefault(_ACCEPT, [])
    return lines.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPT, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
