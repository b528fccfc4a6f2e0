import sys
from pathlib import Path

# make the helper modules in tests/ importable under plain names
sys.path.insert(0, str(Path(__file__).parent))

import acceptance_log  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(acceptance_log.LINES, key=lambda k: (int(k[0]), k)):
        terminalreporter.write_line(acceptance_log.LINES[key])
