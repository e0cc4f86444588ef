import hypothesis
import pytest

from wsdkit.synth import build_world_lkb, generate_corpus

hypothesis.settings.register_profile("ci", max_examples=60, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile("ci")

_ACCEPTANCE = []


@pytest.fixture(scope="session")
def world_lkb():
    return build_world_lkb()


@pytest.fixture(scope="session")
def world_corpus(world_lkb):
    return generate_corpus(world_lkb, n_per_lemma=30, seed=7)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.outcome == "skipped":
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], "skipped"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        verdict = {"passed": "PASS", "failed": "FAIL"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"{verdict:7s} {name}")
