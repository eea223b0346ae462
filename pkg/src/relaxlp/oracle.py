"""Brute-force ground truth for delete-free problems: orderability and h+."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .strips import Action, RelaxedProblem

DEFAULT_ACTION_BOUND = 16
INF = math.inf


class TooManyActions(ValueError):
    pass


@dataclass(frozen=True)
class OracleReport:
    h_plus: float  # int, or math.inf when no relaxed plan exists
    optimal_subsets: tuple[frozenset[str], ...]
    witness_plans: tuple[tuple[str, ...], ...]

    @property
    def solvable(self) -> bool:
        return self.h_plus != INF


def orderable(problem: RelaxedProblem, subset: Iterable[str]) -> tuple[str, ...] | None:
    """Order ``subset`` into an executable sequence from the empty state, if possible.

    Greedy: repeatedly apply the lowest-index pending action whose
    preconditions hold.  Without deletes, applying an action early never
    blocks a later one, so the greedy order succeeds whenever any order does.
    """
    names = set(subset)
    pending = [a for a in problem.actions if a.name in names]
    if len(pending) != len(names):
        unknown = names - {a.name for a in pending}
        raise KeyError(f"unknown actions {sorted(unknown)}")
    state: set[str] = set()
    plan: list[str] = []
    while pending:
        for i, a in enumerate(pending):
            if state.issuperset(a.pre):
                state.update(a.add)
                plan.append(a.name)
                del pending[i]
                break
        else:
            return None
    return tuple(plan)


def replay(problem: RelaxedProblem, plan: Iterable[str]) -> frozenset[str] | None:
    """Execute ``plan`` from the empty state; None if some step is inapplicable."""
    state: set[str] = set()
    for name in plan:
        a = problem.action(name)
        if not state.issuperset(a.pre):
            return None
        state.update(a.add)
    return frozenset(state)


def achieves_goal(problem: RelaxedProblem, plan: tuple[str, ...] | None) -> bool:
    if plan is None:
        return False
    reached = replay(problem, plan)
    return reached is not None and reached.issuperset(problem.goal)


def _subsets(actions: tuple[Action, ...]) -> Iterator[tuple[Action, ...]]:
    for k in range(len(actions) + 1):
        yield from combinations(actions, k)


def _check_bound(problem: RelaxedProblem, bound: int) -> None:
    if len(problem.actions) > bound:
        raise TooManyActions(f"{len(problem.actions)} actions exceed the oracle bound {bound}")


def plan_subsets(problem: RelaxedProblem, bound: int = DEFAULT_ACTION_BOUND) -> dict[frozenset[str], tuple[str, ...]]:
    """Every action subset that can be ordered into a relaxed plan, with a witness order."""
    _check_bound(problem, bound)
    out = {}
    for chosen in _subsets(problem.actions):
        names = frozenset(a.name for a in chosen)
        plan = orderable(problem, names)
        if achieves_goal(problem, plan):
            out[names] = plan
    return out


def h_plus(problem: RelaxedProblem, bound: int = DEFAULT_ACTION_BOUND) -> OracleReport:
    """Optimal relaxed-plan cost by sweeping subsets by size, skipping those over the incumbent."""
    _check_bound(problem, bound)
    best = INF
    winners: list[tuple[frozenset[str], tuple[str, ...]]] = []
    for chosen in _subsets(problem.actions):
        cost = sum(a.cost for a in chosen)
        if cost > best:
            continue
        names = frozenset(a.name for a in chosen)
        plan = orderable(problem, names)
        if not achieves_goal(problem, plan):
            continue
        if cost < best:
            best, winners = cost, []
        winners.append((names, plan))
    return OracleReport(
        h_plus=best,
        optimal_subsets=tuple(s for s, _ in winners),
        witness_plans=tuple(p for _, p in winners),
    )


def format_h_plus(value: float) -> str:
    return "inf" if value == INF else str(int(value))
