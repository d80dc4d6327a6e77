import sys

import hypothesis

hypothesis.settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    suppress_health_check=[hypothesis.HealthCheck.filter_too_much],
)
hypothesis.settings.load_profile("suite")


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance-criterion lines where capture cannot eat them."""
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "CRITERION_LINES", ())
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.line(line)
