import os

import pytest

from linkage import PresentedModule, quotient_ring

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CORPUS = os.path.join(ROOT, "corpus")


def q(R, gens, twist=0):
    return PresentedModule.quotient(R, gens, twist)


def ideal(R, gens):
    return PresentedModule.ideal(R, gens)


@pytest.fixture(scope="session")
def S2():
    return quotient_ring("x y")


@pytest.fixture(scope="session")
def S3():
    return quotient_ring("x y z")


@pytest.fixture(scope="session")
def hyp():
    return quotient_ring("x y", ["x*y"])


@pytest.fixture(scope="session")
def cubic():
    return quotient_ring("a b c d", ["a*c - b^2", "b*d - c^2", "a*d - b*c"])


@pytest.fixture(scope="session")
def ci():
    return quotient_ring("x y z w", ["x*z", "y*w"])


# one line per acceptance criterion, printed after the run
ACCEPTANCE = {}


def record(n, ok, detail):
    ACCEPTANCE[n] = (ok, detail)


def pytest_configure(config):
    from linkage.groebner import set_postcheck

    set_postcheck(True)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        tr.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {n:>2}: {detail}")
