import pytest
from hypothesis import settings

from ncgrowth.corpus import load_corpus

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def corpus():
    return {e.name: e.load() for e in load_corpus()}


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for rec in mod.RESULTS:
        terminalreporter.write_line(rec.line())
