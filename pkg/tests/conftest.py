import json
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from addsys.canonical import ExplicitPeriodic  # noqa: E402

ADDER_PROGRAM = "33/20 5/11 13/10 1/5 2/3 10/7 7/2"
APERIODIC_A = [0, 1, 5, 6, 12, 25, 29, 36, 42, 48, 49, 53]


@st.composite
def digit_sets(draw, max_base=6, spread=3):
    """A complete residue system containing 0: residue r maps to r + base*m_r."""
    base = draw(st.integers(2, max_base))
    shifts = draw(st.lists(st.integers(-spread, spread), min_size=base - 1, max_size=base - 1))
    return [0] + [r + base * m for r, m in zip(range(1, base), shifts)]


@st.composite
def canonical_specs(draw, max_levels=4, max_base=6):
    sets = draw(st.lists(digit_sets(max_base=max_base), min_size=1, max_size=max_levels))
    cycle_from = draw(st.integers(0, len(sets) - 1))
    return ExplicitPeriodic(sets, cycle_from)


@pytest.fixture
def write_json(tmp_path):
    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)

    return write


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call":
        _ACCEPTANCE.extend(v for k, v in report.user_properties if k == "acceptance")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
