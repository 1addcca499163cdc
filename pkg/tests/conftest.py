import pytest
from hypothesis import strategies as st

from constrained_codes import (
    Alphabet,
    ConstraintSpec,
    ForbiddenWordsSpec,
    RunningSumSpec,
    SlidingWindowSpec,
    SubblockWeightSpec,
)

_acceptance_lines = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    label = report.user_properties and dict(report.user_properties).get("acceptance")
    if label:
        _acceptance_lines.append(f"[{'PASS' if report.passed else 'FAIL'}] {label}")


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    marker = item.get_closest_marker("acceptance")
    if marker:
        item.user_properties.append(("acceptance", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture
def lrs_spec():
    """Alphabet {-1,+1}, n=6, prefix sums in [0,3], final sum in [0,2]."""
    return ConstraintSpec(Alphabet((-1, 1)), 6, (RunningSumSpec(0, 3, 0, 2),))


@pytest.fixture
def rll_spec():
    return ConstraintSpec(Alphabet((0, 1)), 3, (ForbiddenWordsSpec(((0, 0), (1, 1, 1))),))


def fixed_weight_spec(n, nu):
    return ConstraintSpec(Alphabet((0, 1)), n, (RunningSumSpec(0, n, nu, nu),))


# -- hypothesis strategies: small valid specs --------------------------------

alphabets = st.sampled_from([(0, 1), (-1, 1), (0, 1, 2), (-1, 0, 1), (1, 0)])


@st.composite
def running_sums(draw, letters):
    lo, hi = sorted(draw(st.lists(st.integers(-4, 6), min_size=2, max_size=2)))
    a, b = sorted(draw(st.lists(st.integers(lo, hi), min_size=2, max_size=2)))
    return RunningSumSpec(lo, hi, a, b)


@st.composite
def sliding_windows(draw, letters):
    window = draw(st.integers(1, 4))
    top = window * max(letters)
    a, b = sorted(draw(st.lists(st.integers(0, top), min_size=2, max_size=2)))
    return SlidingWindowSpec(window, a, b)


@st.composite
def subblocks(draw, letters, n):
    block = draw(st.sampled_from([d for d in range(1, 4) if n % d == 0]))
    a, b = sorted(draw(st.lists(st.integers(0, block * max(letters)), min_size=2, max_size=2)))
    return SubblockWeightSpec(block, a, b)


@st.composite
def forbidden(draw, letters):
    words = draw(
        st.lists(
            st.lists(st.sampled_from(letters), min_size=1, max_size=4).map(tuple),
            min_size=1,
            max_size=3,
            unique=True,
        )
    )
    return ForbiddenWordsSpec(tuple(words))


@st.composite
def specs(draw, max_n=7):
    letters = draw(alphabets)
    n = draw(st.integers(1, max_n if len(letters) == 2 else 5))
    options = [running_sums(letters), forbidden(letters)]
    if min(letters) >= 0:
        options += [sliding_windows(letters), subblocks(letters, n)]
    constraints = draw(st.lists(st.one_of(options), max_size=3))
    return ConstraintSpec(Alphabet(letters), n, tuple(constraints))
