from fractions import Fraction as F

import pytest
from hypothesis import strategies as st

from cmslopes.cmtypes import validate_cm_type
from cmslopes.groups import cyclic, divisors, subgroup_of_order, units_mod
from cmslopes.slopes import make_slope_sequence


def seq(*values):
    vals = [F(v) for v in values]
    return make_slope_sequence(vals, len(vals) // 2)


@pytest.fixture
def S():
    return seq


@st.composite
def cm_and_subgroup(draw, max_order=24):
    """A random valid CM type on Z/2gZ or (Z/lZ)^x together with a random subgroup."""
    if draw(st.booleans()):
        g = draw(st.integers(1, max_order // 2))
        G = cyclic(2 * g)
        pairs = [(i, i + g) for i in range(g)]
    else:
        ell = draw(st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23]))
        G = units_mod(ell)
        pairs = [(a, ell - a) for a in range(1, (ell - 1) // 2 + 1)]
    phi = [pair[draw(st.integers(0, 1))] for pair in pairs]
    cm = validate_cm_type(G, phi)
    f = draw(st.sampled_from(divisors(G.order)))
    return cm, subgroup_of_order(G, f)


_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name[len('test_'):]}")
