from functools import lru_cache

import pytest

from hopfbraid.double import build_double
from hopfbraid.hopf import validate_hopf
from hopfbraid.modules import dual_schrodinger, schrodinger
from hopfbraid.zoo import algebra_from_spec

ACCEPTANCE_LINES = []


class Zoo:
    """Session-wide cache of algebras, doubles and Schroedinger modules."""

    @lru_cache(maxsize=None)
    def algebra(self, spec):
        return algebra_from_spec(spec)

    @lru_cache(maxsize=None)
    def double(self, spec):
        return build_double(self.algebra(spec))

    @lru_cache(maxsize=None)
    def schr(self, spec):
        return schrodinger(self.double(spec))

    @lru_cache(maxsize=None)
    def double_report(self, spec):
        return validate_hopf(self.double(spec).H)

    @lru_cache(maxsize=None)
    def dual_schr(self, spec):
        return dual_schrodinger(self.double(spec))


_ZOO = Zoo()


@pytest.fixture(scope="session")
def zoo():
    return _ZOO


@pytest.fixture
def record():
    """Print and remember a PASS/FAIL line for an acceptance criterion."""

    def _record(number, title, ok, detail=""):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
        print(line)
        ACCEPTANCE_LINES.append(line)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
