import pytest
from hypothesis import strategies as st

from macx.complex_core import SimplicialComplex

ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, text: str, ok: bool) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {text}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def complexes(draw, min_m=1, max_m=6):
    m = draw(st.integers(min_m, max_m))
    extra = draw(st.lists(st.integers(1, (1 << m) - 1), max_size=5))
    return SimplicialComplex.from_masks(m, [1 << i for i in range(m)] + extra)


@pytest.fixture(scope="session")
def small_corpus():
    from macx.trc import enumerate_complexes

    return [k for m in range(1, 5) for k in enumerate_complexes(m)]
