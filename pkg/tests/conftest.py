import pytest

from braidkit.symmetries import make_symmetry


@pytest.fixture(scope="session")
def std2():
    return make_symmetry("standard", N=2)


@pytest.fixture(scope="session")
def std3():
    return make_symmetry("standard", N=3)


@pytest.fixture(scope="session")
def flip2():
    return make_symmetry("flip", N=2)


@pytest.fixture(scope="session")
def jordan10():
    return make_symmetry("jordan", a=1, b=0)


@pytest.fixture(scope="session")
def jordan11():
    return make_symmetry("jordan", a=1, b=1)


# acceptance criteria register their outcome here; printed in the terminal summary
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[n]
        line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title}"
        if detail and not ok:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
