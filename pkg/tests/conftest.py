from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from selchab.curve import log_lattice, new_curve
from selchab.etale import build_etale
from selchab.presets import load_data, preset, preset_U

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("default")


@st.composite
def admissible_h(draw, g_min=1, g_max=6, bound=6):
    """(g, h) with deg h <= g and h(0) odd."""
    g = draw(st.integers(g_min, g_max))
    h0 = draw(st.integers(-bound, bound).filter(lambda x: x % 2))
    rest = draw(st.lists(st.integers(-bound, bound), min_size=g, max_size=g))
    return g, [h0] + rest


@st.composite
def admissible_curves(draw, g_min=1, g_max=6, bound=6):
    g, h = draw(admissible_h(g_min, g_max, bound))
    return new_curve(g, h)


def fractions(rows):
    return [[Fraction(x) for x in r] for r in rows]


@pytest.fixture(scope="session")
def a5():
    return preset("a5")


@pytest.fixture(scope="session")
def a5_etale(a5):
    return build_etale(a5.f)


@pytest.fixture(scope="session")
def a5_published_U():
    return fractions(preset_U("a5"))


@pytest.fixture(scope="session")
def a5_lattice(a5, a5_published_U):
    return log_lattice(a5, 24, u_override=a5_published_U)


@pytest.fixture(scope="session")
def curves_data():
    return load_data("curves.json")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
