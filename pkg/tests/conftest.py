import sys
from pathlib import Path

from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "isisor",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("isisor")


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance criterion lines after the captured test output."""
    acceptance = sys.modules.get("test_acceptance")
    lines = getattr(acceptance, "SUMMARY_LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
