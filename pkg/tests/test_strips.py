import pytest
from hypothesis import given

from relaxlp.strips import (Action, DuplicateNameError, NegativeCostError, StripsProblem,
                            StripsSyntaxError, UndeclaredAtomError, format_problem, is_solvable,
                            parse_problem, reachable_atoms, relax, with_actions)

from .conftest import DATA, strips_problems

CHAIN = """\
atoms: p q
goal: q
action a1 cost 1
  add: p
action a2 cost 2
  pre: p
  add: q
"""


def test_parse_ex1():
    prob = parse_problem((DATA / "ex1.strips").read_text())
    assert prob.atoms == ("p", "q")
    assert [a.name for a in prob.actions] == ["a", "b"]
    assert prob.action("a").pre == prob.action("b").add == ("p",)
    assert prob.action("a").add == prob.action("b").pre == ("q",)
    assert prob.init == () and prob.goal == ("p",)


def test_empty_actions_section():
    prob = parse_problem("atoms: p\ninit:\ngoal:\n")
    assert prob.actions == () and prob.goal == ()


def test_defaults_and_comments():
    prob = parse_problem("atoms: p  # the only atom\naction a\n  add: p\n")
    assert prob.action("a").cost == 1
    assert prob.action("a").pre == ()


def test_undeclared_atom_is_named():
    with pytest.raises(UndeclaredAtomError) as info:
        parse_problem("atoms: p q\ngoal: p\naction a\n  pre: r\n  add: p\n")
    assert info.value.atom == "r"
    assert (info.value.line, info.value.column) == (4, 8)


@pytest.mark.parametrize("text, error", [
    ("atoms: p p\n", DuplicateNameError),
    ("atoms: p\naction a\naction a\n", DuplicateNameError),
    ("atoms: p\naction p\n", DuplicateNameError),
    ("atoms: p\naction a cost -2\n", NegativeCostError),
    ("atoms: p\naction a cost x\n", StripsSyntaxError),
    ("atoms: p\n  pre: p\n", StripsSyntaxError),
    ("atoms: p\nbogus line\n", StripsSyntaxError),
    ("goal: p\n", StripsSyntaxError),
    ("atoms: p q!\n", StripsSyntaxError),
])
def test_diagnostics(text, error):
    with pytest.raises(error):
        parse_problem(text)


def test_syntax_error_position():
    with pytest.raises(StripsSyntaxError) as info:
        parse_problem("atoms: p\n\n   what\n")
    assert info.value.line == 3 and info.value.column == 4


def test_relax_normalizes_initial_state():
    prob = parse_problem("atoms: p q\ninit: p\ngoal: p q\naction a\n  pre: p\n  add: q\n  del: p\n")
    rel = relax(prob)
    assert rel.init == () and rel.goal == ("q",)
    assert rel.action("a") == Action("a", (), ("q",), (), 1)
    assert rel.atoms == ("q",)
    assert rel.atom_origin == (1,)


def test_relax_keeps_vacuous_action():
    rel = relax(parse_problem("atoms: p q\ninit: p\naction a\n  add: p\n"))
    assert rel.action("a").add == ()


def test_relax_drops_self_add():
    rel = relax(parse_problem("atoms: p q\naction a\n  pre: p\n  add: p q\n"))
    assert rel.action("a").add == ("q",)


def test_relax_ex1_unchanged(ex1):
    prob = parse_problem((DATA / "ex1.strips").read_text())
    assert ex1.atoms == prob.atoms and ex1.goal == prob.goal and ex1.actions == prob.actions


def test_reachability(ex1, chain):
    assert reachable_atoms(ex1) == frozenset()
    assert reachable_atoms(chain) == {"p", "q"}
    assert not is_solvable(ex1)
    assert is_solvable(chain)
    empty = relax(parse_problem("atoms: p\n"))
    assert reachable_atoms(empty) == frozenset() and is_solvable(empty)


@given(strips_problems())
def test_relax_idempotent(prob):
    once = relax(prob)
    twice = relax(once)
    assert (twice.atoms, twice.goal, twice.actions) == (once.atoms, once.goal, once.actions)


@given(strips_problems())
def test_format_parse_roundtrip(prob):
    again = parse_problem(format_problem(prob))
    assert again == prob


@given(strips_problems())
def test_reachability_monotone_in_actions(prob):
    rel = relax(prob)
    full = reachable_atoms(rel)
    for i in range(len(rel.actions)):
        fewer = with_actions(rel, rel.actions[:i] + rel.actions[i + 1:])
        assert reachable_atoms(fewer) <= full


def test_validation_on_construction():
    with pytest.raises(UndeclaredAtomError):
        StripsProblem(("p",), (), ("q",), ())
