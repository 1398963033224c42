from pathlib import Path

import pytest

from multihilbert.points import PointSet, parse_point_set

DATA = Path(__file__).parent / "data"

# fiber over P_i = [1:i] lists the j with P_i x Q_j in X, Q_j = [1:j]
GRID13_COLUMNS = {1: [1], 2: [1, 2, 3, 4], 3: [2], 4: [1, 3], 5: [3, 4], 6: [2, 3, 4]}
X1_PAIRS = [(1, 1), (2, 2), (2, 3), (3, 1)]
X2_PAIRS = [(1, 3), (2, 1), (2, 2), (3, 1)]


def _from_pairs(pairs) -> PointSet:
    return PointSet.from_coords((1, 1), [((1, i), (1, j)) for i, j in pairs])


@pytest.fixture
def grid13() -> PointSet:
    return _from_pairs([(i, j) for i, js in GRID13_COLUMNS.items() for j in js])


@pytest.fixture
def x1() -> PointSet:
    return _from_pairs(X1_PAIRS)


@pytest.fixture
def x2() -> PointSet:
    return _from_pairs(X2_PAIRS)


@pytest.fixture
def single() -> PointSet:
    return PointSet.from_coords((1, 1), [((1, 1), (1, 1))])


@pytest.fixture
def data_file():
    def load(name: str) -> PointSet:
        return parse_point_set((DATA / name).read_text())
    return load


_ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per acceptance criterion."""
    lines = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])

    def record(number: int, title: str, failures: list, checked: int) -> None:
        status = "PASS" if not failures else "FAIL"
        line = f"criterion {number} {status}: {title} ({checked} checks, {len(failures)} failures)"
        if failures:
            line += f"; first failure: {failures[0]}"
        lines.append(line)
        print(line)
        assert not failures, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda l: int(l.split()[1])):
            terminalreporter.write_line(line)
