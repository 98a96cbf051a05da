import pytest

from divsub.pattern import complete_graph, cycle_graph, path_graph

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record():
    def _record(name: str, ok: bool, detail: str = ""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else ""))
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def P2():
    return path_graph(2)


@pytest.fixture
def P3():
    return path_graph(3)


@pytest.fixture
def K3():
    return complete_graph(3)


@pytest.fixture
def C3():
    return cycle_graph(3)
