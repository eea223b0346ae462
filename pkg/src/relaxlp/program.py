"""Ground normal/choice logic programs and their model semantics.

Atoms are :class:`Sym` values: a kind (``state``, ``action``, ``ws``,
``dep``, ``f``) plus name arguments.  Interpretations are frozensets of
``Sym``.  The checks here follow the textbook definitions directly and
serve as the trusted reference for :mod:`relaxlp.search`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Digraph, has_cycle

KIND_RANK = {"state": 0, "atom": 0, "action": 1, "ws": 2, "dep": 3, "f": 4}
SEMANTICS = ("stable", "supported", "acyclic-supported")
DEFAULT_ENUMERATION_BOUND = 24


@dataclass(frozen=True, order=True)
class Sym:
    kind: str
    args: tuple[str, ...] = ()

    def __str__(self) -> str:
        if self.kind in ("ws", "dep"):
            return f"{self.kind}({','.join(self.args)})"
        if self.kind == "f":
            return "__f"
        return self.args[0]

    def __repr__(self) -> str:
        return str(self)


def state(p: str) -> Sym:
    return Sym("state", (p,))


def action(a: str) -> Sym:
    return Sym("action", (a,))


def ws(a: str, p: str) -> Sym:
    return Sym("ws", (a, p))


def dep(p: str, q: str) -> Sym:
    return Sym("dep", (p, q))


FALSUM = Sym("f")

_NAME = re.compile(r"(ws|dep)\(([A-Za-z0-9_-]+),([A-Za-z0-9_-]+)\)\Z|([A-Za-z0-9_-]+)\Z")


def parse_sym(text: str, actions: Iterable[str] = ()) -> Sym:
    """Inverse of ``str(sym)``; plain names listed in ``actions`` become action atoms."""
    if text == "__f":
        return FALSUM
    m = _NAME.match(text)
    if not m:
        raise ValueError(f"malformed atom name {text!r}")
    if m.group(1):
        return Sym(m.group(1), (m.group(2), m.group(3)))
    name = m.group(4)
    return action(name) if name in set(actions) else state(name)


@dataclass(frozen=True)
class Rule:
    head: Sym
    pos: tuple[Sym, ...] = ()
    neg: tuple[Sym, ...] = ()
    choice: bool = False

    def atoms(self) -> tuple[Sym, ...]:
        return (self.head, *self.pos, *self.neg)

    def body_holds(self, interp: frozenset[Sym]) -> bool:
        return all(b in interp for b in self.pos) and not any(c in interp for c in self.neg)

    def __str__(self) -> str:
        head = f"{{{self.head}}}" if self.choice else str(self.head)
        body = [str(b) for b in self.pos] + [f"not {c}" for c in self.neg]
        return f"{head} :- {', '.join(body)}." if body else f"{head}."


@dataclass(frozen=True)
class LogicProgram:
    rules: tuple[Rule, ...]
    minimize: tuple[tuple[Sym, int], ...] = ()
    order: tuple[Sym, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "minimize", tuple(self.minimize))
        for _, w in self.minimize:
            if w < 0:
                raise ValueError("minimize weights must be non-negative")
        # ``order`` is a numbering hint; atoms no rule or weight mentions are dropped
        mentioned = dict.fromkeys(s for r in self.rules for s in r.atoms())
        mentioned.update(dict.fromkeys(s for s, _ in self.minimize))
        hinted = [s for s in dict.fromkeys(self.order) if s in mentioned]
        rest = [s for s in mentioned if s not in set(hinted)]
        object.__setattr__(self, "order", tuple(hinted + rest))

    @property
    def signature(self) -> frozenset[Sym]:
        sig = self.__dict__.get("_sig")
        if sig is None:
            sig = frozenset(s for r in self.rules for s in r.atoms())
            object.__setattr__(self, "_sig", sig)
        return sig

    @property
    def atoms(self) -> tuple[Sym, ...]:
        """Signature in handle order (handle ``i + 1`` for position ``i``)."""
        sig = self.signature
        return tuple(s for s in self.order if s in sig)

    @property
    def handles(self) -> dict[Sym, int]:
        """Numbering of every atom mentioned anywhere, minimize included, from 1."""
        return {s: i for i, s in enumerate(self.order, start=1)}

    def is_positive(self) -> bool:
        return all(not r.choice and not r.neg for r in self.rules)

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rules)


def is_model(program: LogicProgram, interp: Iterable[Sym]) -> bool:
    interp = frozenset(interp)
    return all(r.choice or r.head in interp or not r.body_holds(interp) for r in program.rules)


def reduct(program: LogicProgram, interp: Iterable[Sym]) -> LogicProgram:
    interp = frozenset(interp)
    out = []
    for r in program.rules:
        if any(c in interp for c in r.neg):
            continue
        if r.choice and r.head not in interp:
            continue
        out.append(Rule(r.head, r.pos))
    return LogicProgram(tuple(out), order=program.order)


def least_model(program: LogicProgram) -> frozenset[Sym]:
    if not program.is_positive():
        raise ValueError("least_model needs a positive normal program")
    waiting: dict[Sym, list[int]] = {}
    missing = []
    model: set[Sym] = set()
    queue = []
    for i, r in enumerate(program.rules):
        body = set(r.pos)
        missing.append(len(body))
        for b in body:
            waiting.setdefault(b, []).append(i)
        if not body:
            queue.append(r.head)
    while queue:
        a = queue.pop()
        if a in model:
            continue
        model.add(a)
        for i in waiting.get(a, ()):
            missing[i] -= 1
            if missing[i] == 0:
                queue.append(program.rules[i].head)
    return frozenset(model)


def is_stable(program: LogicProgram, interp: Iterable[Sym]) -> bool:
    interp = frozenset(interp)
    return interp == least_model(reduct(program, interp))


def supporting_rules(program: LogicProgram, interp: Iterable[Sym]) -> list[Rule]:
    interp = frozenset(interp)
    return [r for r in program.rules
            if r.body_holds(interp) and (not r.choice or r.head in interp)]


def is_supported(program: LogicProgram, interp: Iterable[Sym]) -> bool:
    interp = frozenset(interp)
    if not is_model(program, interp):
        return False
    return interp == {r.head for r in supporting_rules(program, interp)}


def dep_graph(interp: Iterable[Sym]) -> Digraph:
    return Digraph.from_arcs((s.args[0], s.args[1]) for s in interp if s.kind == "dep")


def is_acyclic(interp: Iterable[Sym]) -> bool:
    return not has_cycle(dep_graph(interp))


def check(program: LogicProgram, interp: Iterable[Sym], semantics: str) -> bool:
    if semantics == "stable":
        return is_stable(program, interp)
    if semantics == "supported":
        return is_supported(program, interp)
    if semantics == "acyclic-supported":
        return is_supported(program, interp) and is_acyclic(interp)
    raise ValueError(f"unknown semantics {semantics!r}")


def positive_dependency_graph(program: LogicProgram) -> Digraph:
    return Digraph.from_arcs(
        ((r.head, b) for r in program.rules for b in r.pos), vertices=program.atoms)


def model_cost(program: LogicProgram, interp: Iterable[Sym]) -> int:
    interp = frozenset(interp)
    return sum(w for s, w in program.minimize if s in interp)


def canonical_key(program: LogicProgram, interp: Iterable[Sym]) -> tuple[int, ...]:
    h = program.handles
    return tuple(sorted(h[s] for s in interp))


class SignatureTooLarge(ValueError):
    pass


class ModelList(list):
    """List of interpretations with a ``truncated`` flag."""

    truncated = False


def enumerate_models(program: LogicProgram, semantics: str = "stable", limit: int | None = None,
                     bound: int = DEFAULT_ENUMERATION_BOUND) -> ModelList:
    """All interpretations passing ``semantics``, by a full 2^n sweep.

    Results are sorted by the tuple of their atom handles.
    """
    if semantics not in SEMANTICS:
        raise ValueError(f"unknown semantics {semantics!r}")
    atoms = program.atoms
    if len(atoms) > bound:
        raise SignatureTooLarge(f"signature has {len(atoms)} atoms, bound is {bound}")
    found = []
    for k in range(len(atoms) + 1):
        for chosen in combinations(atoms, k):
            interp = frozenset(chosen)
            if check(program, interp, semantics):
                found.append(interp)
    found.sort(key=lambda m: canonical_key(program, m))
    out = ModelList(found[:limit] if limit is not None else found)
    out.truncated = limit is not None and len(found) > limit
    return out


def project(models: Iterable[Iterable[Sym]], kinds: Sequence[str] = ("action",)) -> set[frozenset[Sym]]:
    return {frozenset(s for s in m if s.kind in kinds) for m in models}
