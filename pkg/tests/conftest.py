import pytest

from seqcm.combinatorics import MonomialPrime, RingSpec
from seqcm.io import BUILTINS

# one line per acceptance criterion, filled by test_acceptance.py
CRITERIA: dict[int, tuple[str, bool, str]] = {}

R33 = RingSpec(3, 3)

# prime numbering used throughout the regression fixtures
RP2_PRIMES = ["x3 y1 y3", "x1 y1 y3", "x2 y1 y2", "x3 y1 y2", "x1 y2 y3",
              "x2 y2 y3", "x2 x3 y3", "x1 x2 y1", "x1 x3 y2", "x1 x2 x3"]
MOEBIUS_PRIMES = ["x2 x3 y2", "x1 x2 y2", "x1 x2 y1", "x1 x3 y3", "x1 y1 y3", "x3 y2 y3"]


def numbered(names: list[str], ring: RingSpec = R33) -> dict[int, MonomialPrime]:
    return {i + 1: MonomialPrime(ring, ring.mask_of(s.split())) for i, s in enumerate(names)}


@pytest.fixture(scope="session")
def rp2():
    return BUILTINS["rp2"].ideal()


@pytest.fixture(scope="session")
def moebius():
    return BUILTINS["moebius"].ideal()


@pytest.fixture(scope="session")
def squares():
    return BUILTINS["squares"].ideal()


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        name, ok, detail = CRITERIA[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {name}  {detail}")
