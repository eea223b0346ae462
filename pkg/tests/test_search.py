"""The completion search must agree with the 2^n sweep wherever both run."""
from hypothesis import given
from hypothesis import strategies as st

from relaxlp.encoding import action_atoms, encode
from relaxlp.program import SEMANTICS, LogicProgram, Rule, dep, enumerate_models, project, state
from relaxlp.search import has_model, projected_models, search_models

from .conftest import relaxed_problems
from .test_program import ATOMS, programs

DEPS = [dep(x, y) for x in "pqr" for y in "pqr" if x != y]
dep_rules = st.builds(
    Rule,
    head=st.sampled_from(DEPS + ATOMS[:3]),
    pos=st.lists(st.sampled_from(DEPS + ATOMS[:3]), max_size=2, unique=True).map(tuple),
    neg=st.lists(st.sampled_from(ATOMS[:3]), max_size=1).map(tuple),
    choice=st.booleans(),
)
dep_programs = st.lists(dep_rules, max_size=9).map(lambda rs: LogicProgram(tuple(rs)))


@given(programs, st.sampled_from(SEMANTICS))
def test_search_matches_sweep(prog, semantics):
    assert search_models(prog, semantics) == enumerate_models(prog, semantics)


@given(dep_programs, st.sampled_from(SEMANTICS))
def test_search_matches_sweep_with_dep_atoms(prog, semantics):
    assert search_models(prog, semantics) == enumerate_models(prog, semantics)


@given(programs, st.sampled_from(SEMANTICS), st.lists(st.sampled_from(ATOMS), max_size=3, unique=True))
def test_projection_matches_sweep(prog, semantics, onto):
    keep = frozenset(onto)
    expected = {m & keep for m in enumerate_models(prog, semantics)}
    assert projected_models(prog, onto, semantics) == expected
    assert has_model(prog, semantics) == bool(expected)


@given(relaxed_problems, st.sampled_from(["p", "acyc", "pc", "pd"]), st.sampled_from(SEMANTICS))
def test_search_on_small_encodings(problem, encoding, semantics):
    prog = encode(problem, encoding)
    if len(prog.atoms) > 16:
        return
    full = enumerate_models(prog, semantics)
    assert search_models(prog, semantics) == full
    assert {m & set(action_atoms(problem)) for m in full} == projected_models(
        prog, action_atoms(problem), semantics)


def test_limit_truncates():
    prog = LogicProgram(tuple(Rule(x, choice=True) for x in ATOMS[:4]))
    out = search_models(prog, "supported", limit=5)
    assert len(out) == 5 and out.truncated


def test_projection_helper():
    a, b = state("a"), state("b")
    assert project([{a, b}], ("state",)) == {frozenset({a, b})}
