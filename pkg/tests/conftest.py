import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from relaxlp.strips import Action, StripsProblem, parse_problem, relax

DATA = Path(__file__).parent / "data"

settings.register_profile("dev", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dev"))


def load(name):
    return relax(parse_problem((DATA / f"{name}.strips").read_text()))


@pytest.fixture
def ex1():
    return load("ex1")


@pytest.fixture
def chain():
    return load("chain")


@st.composite
def strips_problems(draw, max_atoms=5, max_actions=5, max_cost=3):
    n = draw(st.integers(1, max_atoms))
    atoms = tuple(f"p{i}" for i in range(n))
    subset = st.lists(st.sampled_from(atoms), unique=True, max_size=n).map(
        lambda xs: tuple(sorted(xs, key=atoms.index)))
    actions = []
    for j in range(draw(st.integers(0, max_actions))):
        actions.append(Action(f"a{j}", draw(subset), draw(subset), draw(subset),
                              draw(st.integers(0, max_cost))))
    return StripsProblem(atoms, draw(subset), draw(subset), tuple(actions))


relaxed_problems = strips_problems().map(relax)


# acceptance summary: tests/test_acceptance.py appends (criterion, passed, detail)
ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
