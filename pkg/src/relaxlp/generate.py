"""Seeded random STRIPS instances for property sweeps."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Digraph
from .strips import Action, RelaxedProblem, StripsProblem, relax


@dataclass
class InstanceShape:
    max_atoms: int = 6
    max_actions: int = 6
    max_cost: int = 3
    density: float = 0.3  # chance an atom lands in a given pre/add/del list
    init_rate: float = 0.15
    max_goals: int = 3


def random_problem(rng: random.Random, shape: InstanceShape | None = None) -> StripsProblem:
    shape = shape or InstanceShape()
    n = rng.randint(1, shape.max_atoms)
    m = rng.randint(0, shape.max_actions)
    atoms = tuple(f"p{i}" for i in range(n))

    def pick(rate):
        return tuple(p for p in atoms if rng.random() < rate)

    init = pick(shape.init_rate)
    goal = tuple(sorted(rng.sample(atoms, rng.randint(0, min(shape.max_goals, n))), key=atoms.index))
    actions = []
    for j in range(m):
        pre = pick(shape.density)
        add = pick(shape.density) or (rng.choice(atoms),)
        actions.append(Action(f"a{j}", pre, add, pick(shape.density / 2), rng.randint(0, shape.max_cost)))
    return StripsProblem(atoms, init, goal, tuple(actions))


def random_relaxed(seed: int, shape: InstanceShape | None = None) -> RelaxedProblem:
    return relax(random_problem(random.Random(seed), shape))


def random_digraph(rng: random.Random, max_vertices: int = 10, density: float | None = None) -> Digraph:
    n = rng.randint(0, max_vertices)
    if density is None:
        density = rng.uniform(0.1, 0.9)
    vs = tuple(range(n))
    arcs = frozenset((x, y) for x in vs for y in vs if x != y and rng.random() < density)
    return Digraph(vs, arcs)
