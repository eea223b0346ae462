"""Grounded STRIPS problems: parsing, validation, delete relaxation, reachability.

Text format (line oriented, ``#`` starts a comment)::

    atoms: p q r
    init: p
    goal: q
    action a cost 2
      pre: p
      add: q
      del: r

``pre``/``add``/``del`` lines are optional and attach to the most recent
``action`` header.  ``cost`` defaults to 1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Iterable

TOKEN = re.compile(r"[A-Za-z0-9_-]+\Z")
RESERVED = {"__f", "not", "cost"}


class ProblemError(ValueError):
    """Base class for parse and validation errors; carries a source position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class StripsSyntaxError(ProblemError):
    pass


class DuplicateNameError(ProblemError):
    pass


class UndeclaredAtomError(ProblemError):
    def __init__(self, atom: str, line: int | None = None, column: int | None = None):
        self.atom = atom
        super().__init__(f"undeclared atom {atom!r}", line, column)


class NegativeCostError(ProblemError):
    pass


@dataclass(frozen=True)
class Action:
    name: str
    pre: tuple[str, ...] = ()
    add: tuple[str, ...] = ()
    delete: tuple[str, ...] = ()
    cost: int = 1


@dataclass(frozen=True)
class StripsProblem:
    atoms: tuple[str, ...]
    init: tuple[str, ...]
    goal: tuple[str, ...]
    actions: tuple[Action, ...]

    def __post_init__(self):
        validate(self)

    def atom_index(self, atom: str) -> int:
        return self._atom_pos[atom]

    def action_index(self, name: str) -> int:
        return self._action_pos[name]

    def action(self, name: str) -> Action:
        return self.actions[self._action_pos[name]]

    @property
    def _atom_pos(self) -> dict[str, int]:
        pos = self.__dict__.get("_apos")
        if pos is None:
            pos = {p: i for i, p in enumerate(self.atoms)}
            object.__setattr__(self, "_apos", pos)
        return pos

    @property
    def _action_pos(self) -> dict[str, int]:
        pos = self.__dict__.get("_xpos")
        if pos is None:
            pos = {a.name: i for i, a in enumerate(self.actions)}
            object.__setattr__(self, "_xpos", pos)
        return pos

    def sort_atoms(self, atoms: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(set(atoms), key=self.atom_index))

    def adders(self, atom: str) -> list[Action]:
        return [a for a in self.actions if atom in a.add]


@dataclass(frozen=True)
class RelaxedProblem(StripsProblem):
    """Delete-free problem with an empty initial state.

    ``atom_origin``/``action_origin`` map positions here to positions in the
    source problem.
    """

    atom_origin: tuple[int, ...] = ()
    action_origin: tuple[int, ...] = ()

    def __post_init__(self):
        super().__post_init__()
        if self.init:
            raise ProblemError("relaxed problem must have an empty initial state")
        for a in self.actions:
            if a.delete:
                raise ProblemError(f"relaxed action {a.name!r} has delete effects")
            if set(a.pre) & set(a.add):
                raise ProblemError(f"relaxed action {a.name!r} re-adds a precondition")


def validate(problem: StripsProblem) -> None:
    seen: set[str] = set()
    for p in problem.atoms:
        if not TOKEN.match(p) or p in RESERVED:
            raise StripsSyntaxError(f"invalid atom name {p!r}")
        if p in seen:
            raise DuplicateNameError(f"duplicate atom {p!r}")
        seen.add(p)
    for p in (*problem.init, *problem.goal):
        if p not in seen:
            raise UndeclaredAtomError(p)
    names: set[str] = set()
    for a in problem.actions:
        if not TOKEN.match(a.name) or a.name in RESERVED:
            raise StripsSyntaxError(f"invalid action name {a.name!r}")
        if a.name in names:
            raise DuplicateNameError(f"duplicate action {a.name!r}")
        # atoms and actions share one namespace once rendered as program atoms
        if a.name in seen:
            raise DuplicateNameError(f"action {a.name!r} clashes with an atom of the same name")
        names.add(a.name)
        if a.cost < 0:
            raise NegativeCostError(f"negative cost {a.cost} for action {a.name!r}")
        for p in (*a.pre, *a.add, *a.delete):
            if p not in seen:
                raise UndeclaredAtomError(p)


# -- parsing -----------------------------------------------------------------

def _tokens(text: str, offset: int) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + offset + 1) for m in re.finditer(r"\S+", text)]


def parse_problem(text: str) -> StripsProblem:
    """Parse the STRIPS text format; errors carry 1-based line/column."""
    atoms: list[str] | None = None
    atom_line: dict[str, int] = {}
    sections: dict[str, list[tuple[str, int, int]]] = {}
    actions: list[dict] = []
    current: dict | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        indent = len(line) - len(line.lstrip())
        body = line.strip()
        head, colon, rest = body.partition(":")
        head = head.strip()
        rest_offset = indent + len(body) - len(rest) if colon else 0

        if colon and head in ("atoms", "init", "goal"):
            if head in sections or (head == "atoms" and atoms is not None):
                raise StripsSyntaxError(f"duplicate section {head!r}", lineno, indent + 1)
            toks = _tokens(rest, rest_offset)
            for tok, col in toks:
                if not TOKEN.match(tok):
                    raise StripsSyntaxError(f"invalid token {tok!r}", lineno, col)
            if head == "atoms":
                atoms = []
                for tok, col in toks:
                    if tok in atom_line:
                        raise DuplicateNameError(f"duplicate atom {tok!r}", lineno, col)
                    if tok in RESERVED:
                        raise StripsSyntaxError(f"reserved name {tok!r}", lineno, col)
                    atom_line[tok] = lineno
                    atoms.append(tok)
                sections["atoms"] = []
            else:
                sections[head] = [(tok, lineno, col) for tok, col in toks]
            current = None
            continue

        if colon and head in ("pre", "add", "del"):
            if current is None:
                raise StripsSyntaxError(f"{head!r} outside an action block", lineno, indent + 1)
            if head in current["lists"]:
                raise StripsSyntaxError(f"duplicate {head!r} in action {current['name']!r}", lineno, indent + 1)
            toks = _tokens(rest, rest_offset)
            for tok, col in toks:
                if not TOKEN.match(tok):
                    raise StripsSyntaxError(f"invalid token {tok!r}", lineno, col)
            current["lists"][head] = [(tok, lineno, col) for tok, col in toks]
            continue

        toks = _tokens(body, indent)
        if toks and toks[0][0] == "action" and not colon:
            if len(toks) < 2:
                raise StripsSyntaxError("action header without a name", lineno, toks[0][1])
            name, ncol = toks[1]
            if not TOKEN.match(name) or name in RESERVED:
                raise StripsSyntaxError(f"invalid action name {name!r}", lineno, ncol)
            if any(a["name"] == name for a in actions):
                raise DuplicateNameError(f"duplicate action {name!r}", lineno, ncol)
            cost = 1
            if len(toks) > 2:
                if toks[2][0] != "cost" or len(toks) != 4:
                    raise StripsSyntaxError("expected 'cost <int>' after action name", lineno, toks[2][1])
                ctext, ccol = toks[3]
                if not re.fullmatch(r"-?\d+", ctext):
                    raise StripsSyntaxError(f"invalid cost {ctext!r}", lineno, ccol)
                cost = int(ctext)
                if cost < 0:
                    raise NegativeCostError(f"negative cost {cost} for action {name!r}", lineno, ccol)
            current = {"name": name, "cost": cost, "lists": {}, "line": lineno, "col": ncol}
            actions.append(current)
            continue

        raise StripsSyntaxError(f"unexpected line {body!r}", lineno, indent + 1)

    if atoms is None:
        raise StripsSyntaxError("missing 'atoms:' section")

    declared = set(atoms)

    def resolve(entries):
        out = []
        for tok, lineno, col in entries:
            if tok not in declared:
                raise UndeclaredAtomError(tok, lineno, col)
            if tok not in out:
                out.append(tok)
        return out

    def ordered(names):
        return tuple(sorted(names, key=atoms.index))

    for a in actions:
        if a["name"] in declared:
            raise DuplicateNameError(
                f"action {a['name']!r} clashes with an atom of the same name", a["line"], a["col"])
    init = ordered(resolve(sections.get("init", [])))
    goal = ordered(resolve(sections.get("goal", [])))
    built = []
    for a in actions:
        lists = a["lists"]
        built.append(Action(
            name=a["name"],
            pre=ordered(resolve(lists.get("pre", []))),
            add=ordered(resolve(lists.get("add", []))),
            delete=ordered(resolve(lists.get("del", []))),
            cost=a["cost"],
        ))
    return StripsProblem(tuple(atoms), init, goal, tuple(built))


def format_problem(problem: StripsProblem) -> str:
    lines = [
        "atoms: " + " ".join(problem.atoms),
        "init: " + " ".join(problem.init),
        "goal: " + " ".join(problem.goal),
    ]
    for a in problem.actions:
        lines.append(f"action {a.name} cost {a.cost}")
        lines.append("  pre: " + " ".join(a.pre))
        lines.append("  add: " + " ".join(a.add))
        lines.append("  del: " + " ".join(a.delete))
    return "\n".join(line.rstrip() for line in lines) + "\n"


# -- relaxation and reachability ---------------------------------------------

def relax(problem: StripsProblem) -> RelaxedProblem:
    """Drop delete effects and compile the initial state away.

    Initial-state atoms are removed from the goal, from every pre/add list,
    and from the atom set.  An add that repeats a precondition is dropped.
    """
    init = set(problem.init)
    keep = [i for i, p in enumerate(problem.atoms) if p not in init]
    atoms = tuple(problem.atoms[i] for i in keep)
    actions = []
    for a in problem.actions:
        pre = tuple(p for p in a.pre if p not in init)
        add = tuple(p for p in a.add if p not in init and p not in pre)
        actions.append(Action(a.name, pre, add, (), a.cost))
    if isinstance(problem, RelaxedProblem):
        atom_origin = tuple(problem.atom_origin[i] for i in keep)
        action_origin = problem.action_origin
    else:
        atom_origin = tuple(keep)
        action_origin = tuple(range(len(problem.actions)))
    return RelaxedProblem(
        atoms=atoms,
        init=(),
        goal=tuple(g for g in problem.goal if g not in init),
        actions=tuple(actions),
        atom_origin=atom_origin,
        action_origin=action_origin,
    )


def reachable_atoms(problem: StripsProblem) -> frozenset[str]:
    """Least fixpoint of applying every action whose preconditions hold."""
    reached: set[str] = set()
    pending = list(problem.actions)
    changed = True
    while changed:
        changed = False
        rest = []
        for a in pending:
            if reached.issuperset(a.pre):
                if not reached.issuperset(a.add):
                    reached.update(a.add)
                changed = True
            else:
                rest.append(a)
        pending = rest
    return frozenset(reached)


def is_solvable(problem: StripsProblem) -> bool:
    return reachable_atoms(problem).issuperset(problem.goal)


def with_actions(problem: StripsProblem, actions: Iterable[Action]) -> StripsProblem:
    """Copy of ``problem`` with a different action list (used by property tests)."""
    actions = tuple(actions)
    if isinstance(problem, RelaxedProblem):
        return replace(problem, actions=actions, action_origin=tuple(range(len(actions))))
    return replace(problem, actions=actions)
