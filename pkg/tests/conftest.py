import os
import sys

import hypothesis
import pytest

sys.path.insert(0, os.path.dirname(__file__))

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def power_spec():
    from pcpalab.constructions import build_power_of_two_pcpa
    return build_power_of_two_pcpa()


@pytest.fixture(scope="session")
def otto():
    from pcpalab.constructions import build_otto_acceptor
    return build_otto_acceptor()


@pytest.fixture(scope="session")
def doubling():
    from pcpalab.constructions import build_doubling_sensing_pda
    return build_doubling_sensing_pda()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
