import random
from fractions import Fraction

import pytest

from mgbar.curve_graphs import enumerate_stable_graphs

_ACCEPTANCE: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call" and not rep.failed:
        return
    label = marker.args[0]
    status = "PASS" if rep.passed else "FAIL"
    if _ACCEPTANCE.get(label) != "FAIL":
        _ACCEPTANCE[label] = status


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[0][2:])):
        terminalreporter.write_line(f"[{_ACCEPTANCE[label]}] {label}")


@pytest.fixture(scope="session")
def stable_suite():
    """All stable graphs with <= 6 vertices and genus 3..6."""
    return {g: enumerate_stable_graphs(g, 6) for g in range(3, 7)}


@pytest.fixture
def random_rationals():
    """``random_rationals(count, lo=0, hi=1)``: seeded rationals in [lo, hi]."""
    rng = random.Random(20061016)

    def draw(count, lo=0, hi=1, max_den=97):
        out = []
        for _ in range(count):
            q = rng.randint(1, max_den)
            out.append(Fraction(rng.randint(lo * q, hi * q), q))
        return out

    return draw
