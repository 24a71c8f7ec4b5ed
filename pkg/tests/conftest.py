"""Shared fixtures: toy curves whose constants the suite itself re-derives
by exhaustive enumeration, plus an acceptance-criteria summary hook."""

import random

import pytest

from mecdsa.curve import CurveParams
from mecdsa.multi import MultiCurveConfig
from mecdsa.registry import default_registry

# Toy curves.  Orders and base points are frozen from exhaustive
# enumeration; test_curve re-derives them with the oracle enumerator.
#
#   TEST17:  y^2 = x^3 + 2x + 2 over F_17, G = (5, 1),  n = 19 (p = 1 mod 4)
#   TOY23:   y^2 = x^3 +  x + 4 over F_23, G = (1, 11), n = 29 (p = 3 mod 4)
#   TOY43:   y^2 = x^3      + 7 over F_43, G = (2, 12), n = 31 (p = 3 mod 4)

TEST17 = CurveParams(name="test17", p=17, a=2, b=2, gx=5, gy=1, n=19, h=1)
TOY23 = CurveParams(name="toy23", p=23, a=1, b=4, gx=1, gy=11, n=29, h=1)
TOY43 = CurveParams(name="toy43", p=43, a=0, b=7, gx=2, gy=12, n=31, h=1)


def toy_tuple(c: CurveParams):
    """(p, a, b, gx, gy, n) form consumed by the oracles."""
    return (c.p, c.a, c.b, c.gx, c.gy, c.n)


@pytest.fixture(scope="session")
def test17():
    return TEST17


@pytest.fixture(scope="session")
def toy23():
    return TOY23


@pytest.fixture(scope="session")
def toy43():
    return TOY43


@pytest.fixture(scope="session")
def toy_pair_config():
    return MultiCurveConfig((TEST17, TOY23))


@pytest.fixture(scope="session")
def registry():
    return default_registry()


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion, at the end of the run."""
    lines = []
    for outcome in ("passed", "failed"):
        for report in terminalreporter.stats.get(outcome, []):
            name = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion" in name:
                lines.append((name.split("::", 1)[1], outcome.upper()))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(lines):
        terminalreporter.write_line(f"{outcome:<6} {name}")
