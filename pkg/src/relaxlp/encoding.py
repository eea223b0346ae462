"""Logic-program encodings of delete-free planning problems.

``encode_p``     causal encoding whose stable models are relaxed plans.
``encode_acyc``  well-support instrumentation of ``encode_p`` over ``dep``/``ws`` atoms.
``encode_pc``    ``encode_acyc`` plus vertex-elimination acyclicity rules.
``encode_pd``    diagnostic variant: effects explain actions, actions explain preconditions.

All rule and atom orders derive from atom/action indices of the problem so
that emitted programs are byte-stable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Digraph, EliminationOrdering, EliminationResult, eliminate, input_ordering, min_degree_ordering
from .program import FALSUM, LogicProgram, Rule, Sym, action, dep, state, ws
from .strips import RelaxedProblem

ENCODINGS = ("p", "acyc", "pc", "pd")
ORDERINGS = ("min-degree", "input-order")


@dataclass(frozen=True)
class DependencySkeleton:
    pairs: tuple[tuple[str, str], ...]  # (p, q): some action adds p and requires q
    supports: tuple[tuple[str, str], ...]  # (a, p) with p in add(a)
    graph: Digraph


def dependency_skeleton(problem: RelaxedProblem) -> DependencySkeleton:
    pairs = set()
    supports = []
    for a in problem.actions:
        for p in a.add:
            supports.append((a.name, p))
            for q in a.pre:
                pairs.add((p, q))
    idx = problem.atom_index
    ordered = tuple(sorted(pairs, key=lambda pq: (idx(pq[0]), idx(pq[1]))))
    for p, q in ordered:
        if p == q:
            raise ValueError(f"dependency self-loop on {p!r}; relax() should have removed it")
    return DependencySkeleton(ordered, tuple(supports), Digraph(problem.atoms, frozenset(ordered)))


def make_ordering(problem: RelaxedProblem, strategy: str = "min-degree") -> EliminationOrdering:
    graph = dependency_skeleton(problem).graph
    if strategy == "min-degree":
        return min_degree_ordering(graph)
    if strategy == "input-order":
        return input_ordering(graph)
    raise ValueError(f"unknown ordering {strategy!r}")


def _canonical_order(problem: RelaxedProblem, extra_deps: Sequence[tuple[str, str]] = ()) -> tuple[Sym, ...]:
    idx = problem.atom_index
    deps = set(dependency_skeleton(problem).pairs) | set(extra_deps)
    return (
        *(state(p) for p in problem.atoms),
        *(action(a.name) for a in problem.actions),
        *(ws(a.name, p) for a in problem.actions for p in a.add),
        *(dep(p, q) for p, q in sorted(deps, key=lambda pq: (idx(pq[0]), idx(pq[1])))),
        FALSUM,
    )


def _minimize(problem: RelaxedProblem) -> tuple[tuple[Sym, int], ...]:
    return tuple((action(a.name), a.cost) for a in problem.actions)


def _goal_rules(problem: RelaxedProblem) -> list[Rule]:
    return [Rule(state(g), neg=(state(g),)) for g in problem.goal]


def encode_p(problem: RelaxedProblem) -> LogicProgram:
    rules = _goal_rules(problem)
    for a in problem.actions:
        rules.append(Rule(action(a.name), tuple(state(q) for q in a.pre), choice=True))
        rules.extend(Rule(state(p), (action(a.name),)) for p in a.add)
    return LogicProgram(tuple(rules), _minimize(problem), _canonical_order(problem))


def _acyc_rules(problem: RelaxedProblem) -> list[Rule]:
    rules = _goal_rules(problem)
    for p, q in dependency_skeleton(problem).pairs:
        rules.append(Rule(dep(p, q), (state(q),), choice=True))
    for a in problem.actions:
        for p in a.add:
            support = ws(a.name, p)
            rules.append(Rule(support, tuple(dep(p, q) for q in a.pre), choice=True))
            rules.append(Rule(state(p), (support,)))
            rules.append(Rule(action(a.name), (support,)))
    return rules


def encode_acyc(problem: RelaxedProblem) -> LogicProgram:
    return LogicProgram(tuple(_acyc_rules(problem)), _minimize(problem), _canonical_order(problem))


def acyclicity_rules(problem: RelaxedProblem, ordering: EliminationOrdering) -> tuple[list[Rule], EliminationResult]:
    """Transitivity rules for each fill-in arc and one 2-cycle constraint per pair."""
    result = eliminate(dependency_skeleton(problem).graph, ordering)
    idx = problem.atom_index
    rules = []
    for v, fill in zip(result.ordering.order, result.steps):
        for p, q in sorted(fill, key=lambda pq: (idx(pq[0]), idx(pq[1]))):
            rules.append(Rule(dep(p, q), (dep(p, v), dep(v, q))))
    for p, q in sorted(result.two_cycle_pairs, key=lambda pq: (idx(pq[0]), idx(pq[1]))):
        rules.append(Rule(FALSUM, (dep(p, q), dep(q, p)), (FALSUM,)))
    return rules, result


def _resolve(problem: RelaxedProblem, ordering) -> EliminationOrdering:
    if ordering is None:
        return make_ordering(problem, "min-degree")
    if isinstance(ordering, str):
        return make_ordering(problem, ordering)
    if not isinstance(ordering, EliminationOrdering):
        return EliminationOrdering(tuple(ordering))
    return ordering


def encode_pc(problem: RelaxedProblem, ordering: EliminationOrdering | str | None = None) -> LogicProgram:
    ordering = _resolve(problem, ordering)
    extra, result = acyclicity_rules(problem, ordering)
    rules = _acyc_rules(problem) + extra
    return LogicProgram(tuple(rules), _minimize(problem), _canonical_order(problem, result.fill_in))


def encode_pd(problem: RelaxedProblem, ordering: EliminationOrdering | str | None = None) -> LogicProgram:
    ordering = _resolve(problem, ordering)
    rules = _goal_rules(problem)
    rules.extend(Rule(state(p), choice=True) for p in problem.atoms)
    for a in problem.actions:
        for p in a.add:
            support = ws(a.name, p)
            rules.append(Rule(support, (state(p),), choice=True))
            rules.append(Rule(action(a.name), (support,)))
            rules.extend(Rule(dep(p, q), (support,)) for q in a.pre)
    for p in problem.atoms:
        unsupported = tuple(ws(a.name, p) for a in problem.actions if p in a.add)
        rules.append(Rule(FALSUM, (state(p),), (*unsupported, FALSUM)))
    for p, q in dependency_skeleton(problem).pairs:
        rules.append(Rule(state(q), (dep(p, q),)))
    extra, result = acyclicity_rules(problem, ordering)
    rules.extend(extra)
    return LogicProgram(tuple(rules), _minimize(problem), _canonical_order(problem, result.fill_in))


def encode(problem: RelaxedProblem, encoding: str, ordering: EliminationOrdering | str | None = None) -> LogicProgram:
    if encoding == "p":
        return encode_p(problem)
    if encoding == "acyc":
        return encode_acyc(problem)
    if encoding == "pc":
        return encode_pc(problem, ordering)
    if encoding == "pd":
        return encode_pd(problem, ordering)
    raise ValueError(f"unknown encoding {encoding!r}")


def action_atoms(problem: RelaxedProblem) -> tuple[Sym, ...]:
    return tuple(action(a.name) for a in problem.actions)


def actions_of(model) -> frozenset[str]:
    """Names of the actions whose atoms are true in ``model``."""
    return frozenset(s.args[0] for s in model if s.kind == "action")
