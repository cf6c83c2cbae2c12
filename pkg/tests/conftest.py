import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gbelief import ComplexScalar, Frame, build_cbba  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def frame_ab():
    return Frame("ab")


@pytest.fixture
def worked(frame_ab):
    """{a}: 0.3+0.4i, {b}: 0.3-0.4i, {a,b}: 0.4."""
    p = frame_ab.proposition
    return build_cbba(
        frame_ab,
        [(p("a"), ComplexScalar(0.3, 0.4)), (p("b"), ComplexScalar(0.3, -0.4)), (p("ab"), ComplexScalar(0.4, 0.0))],
    )


@pytest.fixture
def fixtures_dir():
    return FIXTURES


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record_criterion():
    def record(number: int, passed: bool, detail: str) -> None:
        ACCEPTANCE_RESULTS[number] = (passed, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        passed, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}")
