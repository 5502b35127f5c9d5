import pytest
from hypothesis import HealthCheck, settings

from rectile.geometry import polygon_from_path, validate
from rectile.groupword import parse_raw
from rectile.rational import Rat

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

# the two boundary paths of the worked L-shaped example, from the basepoint
# counterclockwise and clockwise to the far corner
FIG3_CCW = "h(1) v(1/2) h(1/3) v(1/2) h(1/4) v(1/4) h(1/4) v(1)"
FIG3_CW = "v(3/2) h(1/3) v(1/2) h(1/4) v(1/4) h(5/4)"
OCTAGON = "h(2/3) v(1/3) h(-1/3) v(1) h(-2/3) v(-1/3) h(1/3) v(-1)"


def fig3_polygon():
    ccw = parse_raw(FIG3_CCW)
    cw = parse_raw(FIG3_CW)
    # close the loop: ccw path out, cw path back
    loop = ccw + [(axis, -value) for axis, value in reversed(cw)]
    return polygon_from_path(loop)


def octagon_polygon():
    return polygon_from_path(parse_raw(OCTAGON))


def rect_polygon(w, h):
    w, h = Rat(w), Rat(h)
    return validate([(0, 0), (w, 0), (w, h), (0, h)])


@pytest.fixture
def fig3():
    return fig3_polygon()


@pytest.fixture
def octagon():
    return octagon_polygon()


@pytest.fixture
def unit_square():
    return rect_polygon(1, 1)


# ---------------------------------------------------------------------------
# acceptance summary: one line per criterion at the end of the run

_ACCEPTANCE_LINES = {}


@pytest.fixture
def acceptance_report():
    def report(number: int, passed: bool, detail: str) -> None:
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}"
        _ACCEPTANCE_LINES[number] = line
        print(line)

    return report


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE_LINES):
        terminalreporter.write_line(_ACCEPTANCE_LINES[number])
