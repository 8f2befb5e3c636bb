import pytest
from hypothesis import settings

from bcdcat.series import InvalidParametersError, make_spec

settings.register_profile("default", deadline=None)
settings.load_profile("default")

ALL_SERIES = ("C", "CB", "CBneg", "Bneg", "BD", "BDneg", "D")


def specs(series=ALL_SERIES, nmax=3, kmax=3, total=None):
    """Every non-degenerate spec in range."""
    out = []
    for ser in series:
        for n in range(1, nmax + 1):
            for k in range(1, kmax + 1):
                if total is not None and n + k > total:
                    continue
                try:
                    out.append(make_spec(ser, n, k))
                except InvalidParametersError:
                    pass
    return out


def spec_id(spec):
    return f"{spec.series}-{spec.n}-{spec.k}"


@pytest.fixture
def c11():
    return make_spec("C", 1, 1)


@pytest.fixture
def c12():
    return make_spec("C", 1, 2)


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[num])
