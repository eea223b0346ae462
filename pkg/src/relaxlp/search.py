"""Complete model enumeration by DPLL over the completion of a program.

The full 2^n sweep in :func:`relaxlp.program.enumerate_models` is only
usable up to about twenty atoms.  The supported-model encodings of even
six-action problems carry several dozen ``ws``/``dep`` atoms, so the
correspondence checks enumerate with this search instead.

Supported models are exactly the models of the Clark completion::

    body(r) -> head(r)                      for normal rules r
    x -> OR { body(r) : head(r) = x }       for every atom x

which is turned into clauses with one auxiliary variable per distinct body.
The search branches on program atoms only; every total assignment that
survives unit propagation is a supported model.  Stable and acyclic models
are then filtered with the reference checks in :mod:`relaxlp.program`, and
every reported model is re-checked against the definition.
"""
from __future__ import annotations

from typing import Callable, Iterable, Iterator, Sequence

from .program import (SEMANTICS, LogicProgram, ModelList, Sym, canonical_key, is_acyclic,
                      is_stable, is_supported)


class Completion:
    """Clausal completion with unit propagation over two watched literals."""

    def __init__(self, program: LogicProgram):
        self.program = program
        self.atoms = program.atoms
        self.var = {s: i for i, s in enumerate(self.atoms, start=1)}
        self.nvars = len(self.atoms)
        clauses: list[list[int]] = []
        bodies: dict[tuple[frozenset[int], frozenset[int]], int] = {}
        support: dict[int, list[int]] = {v: [] for v in range(1, self.nvars + 1)}

        for r in program.rules:
            pos = frozenset(self.var[b] for b in r.pos)
            neg = frozenset(self.var[c] for c in r.neg)
            key = (pos, neg)
            beta = bodies.get(key)
            if beta is None:
                self.nvars += 1
                beta = bodies[key] = self.nvars
                lits = [*pos, *(-c for c in neg)]
                for lit in lits:
                    clauses.append([-beta, lit])
                clauses.append([beta, *(-lit for lit in lits)])
            h = self.var[r.head]
            if not r.choice:
                clauses.append([-beta, h])
            support[h].append(beta)
        for h, betas in support.items():
            clauses.append([-h, *dict.fromkeys(betas)])

        self.clauses = []
        for c in clauses:
            c = list(dict.fromkeys(c))
            if any(-lit in c for lit in c):
                continue  # tautology
            self.clauses.append(c)

    # -- solver state ------------------------------------------------------

    def _reset(self) -> bool:
        self.value = [0] * (self.nvars + 1)
        self.trail: list[int] = []
        self.watches: dict[int, list[int]] = {}
        self.qhead = 0
        units = []
        for i, c in enumerate(self.clauses):
            if not c:
                return False
            if len(c) == 1:
                units.append(c[0])
                continue
            self.watches.setdefault(c[0], []).append(i)
            self.watches.setdefault(c[1], []).append(i)
        for lit in units:
            if not self._assign(lit):
                return False
        return True

    def _lit_value(self, lit: int) -> int:
        v = self.value[abs(lit)]
        return v if lit > 0 else -v

    def _assign(self, lit: int) -> bool:
        cur = self._lit_value(lit)
        if cur == 1:
            return True
        if cur == -1:
            return False
        self.value[abs(lit)] = 1 if lit > 0 else -1
        self.trail.append(lit)
        return True

    def _propagate(self) -> bool:
        value = self.value
        clauses = self.clauses
        watches = self.watches
        while self.qhead < len(self.trail):
            false_lit = -self.trail[self.qhead]
            self.qhead += 1
            watching = watches.get(false_lit)
            if not watching:
                continue
            keep = []
            i = 0
            n = len(watching)
            while i < n:
                ci = watching[i]
                i += 1
                c = clauses[ci]
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                other = c[0]
                ov = value[abs(other)]
                if (ov if other > 0 else -ov) == 1:
                    keep.append(ci)
                    continue
                for k in range(2, len(c)):
                    lit = c[k]
                    lv = value[abs(lit)]
                    if (lv if lit > 0 else -lv) != -1:
                        c[1], c[k] = lit, c[1]
                        watches.setdefault(lit, []).append(ci)
                        break
                else:
                    keep.append(ci)
                    if (ov if other > 0 else -ov) == -1:
                        keep.extend(watching[i:])
                        watches[false_lit] = keep
                        return False
                    self.value[abs(other)] = 1 if other > 0 else -1
                    self.trail.append(other)
            watches[false_lit] = keep
        return True

    def _undo(self, size: int) -> None:
        for lit in self.trail[size:]:
            self.value[abs(lit)] = 0
        del self.trail[size:]
        self.qhead = size

    # -- enumeration -------------------------------------------------------

    def models(self, accept: Callable[[frozenset[Sym]], bool] | None = None,
               project: Sequence[Sym] | None = None) -> Iterator[frozenset[Sym]]:
        """Yield accepted total models.

        With ``project``, branch on those atoms first and yield one accepted
        model per distinct assignment to them.
        """
        if not self._reset() or not self._propagate():
            return
        proj_vars = [self.var[s] for s in project or () if s in self.var]
        rest = [v for v in range(1, len(self.atoms) + 1) if v not in set(proj_vars)]
        order = proj_vars + rest
        # each decision: (trail size before, literal, flipped)
        decisions: list[tuple[int, int, bool]] = []

        def proj_done() -> int | None:
            for v in proj_vars:
                if self.value[v] == 0:
                    return None
            return len(decisions)

        cut = None  # decision depth at which the projected part became total
        while True:
            if project is not None and cut is None:
                cut = proj_done()
            pick = next((v for v in order if self.value[v] == 0), None)
            backtrack_to = None
            if pick is None:
                model = frozenset(self.atoms[v - 1] for v in range(1, len(self.atoms) + 1)
                                  if self.value[v] == 1)
                if accept is None or accept(model):
                    yield model
                    if project is not None:
                        backtrack_to = cut
            else:
                decisions.append((len(self.trail), -pick, False))
                self._assign(-pick)
                if self._propagate():
                    continue
            # backtrack: find the deepest unflipped decision (not above ``backtrack_to``)
            if backtrack_to is not None:
                while len(decisions) > backtrack_to:
                    size, _, _ = decisions.pop()
                    self._undo(size)
            while True:
                while decisions and decisions[-1][2]:
                    size, _, _ = decisions.pop()
                    self._undo(size)
                if not decisions:
                    return
                size, lit, _ = decisions.pop()
                self._undo(size)
                if cut is not None and len(decisions) < cut:
                    cut = None
                decisions.append((size, -lit, True))
                self._assign(-lit)
                if self._propagate():
                    break
            if cut is not None and len(decisions) < cut:
                cut = None


def _acceptor(program: LogicProgram, semantics: str, verify: bool) -> Callable[[frozenset[Sym]], bool]:
    if semantics not in SEMANTICS:
        raise ValueError(f"unknown semantics {semantics!r}")

    def accept(model: frozenset[Sym]) -> bool:
        if verify and not is_supported(program, model):
            raise AssertionError(f"completion search produced an unsupported model {sorted(model)}")
        if semantics == "stable":
            return is_stable(program, model)
        if semantics == "acyclic-supported":
            return is_acyclic(model)
        return True

    return accept


def search_models(program: LogicProgram, semantics: str = "stable", limit: int | None = None,
                  verify: bool = True) -> ModelList:
    """All models under ``semantics``, sorted like :func:`enumerate_models`."""
    found = []
    for m in Completion(program).models(_acceptor(program, semantics, verify)):
        found.append(m)
    found.sort(key=lambda m: canonical_key(program, m))
    out = ModelList(found[:limit] if limit is not None else found)
    out.truncated = limit is not None and len(found) > limit
    return out


def projected_models(program: LogicProgram, atoms: Iterable[Sym], semantics: str = "stable",
                     verify: bool = True) -> set[frozenset[Sym]]:
    """Distinct restrictions of the models to ``atoms`` (one search, no full enumeration)."""
    atoms = list(dict.fromkeys(atoms))
    keep = frozenset(atoms)
    out = set()
    for m in Completion(program).models(_acceptor(program, semantics, verify), project=atoms):
        out.add(m & keep)
    return out


def has_model(program: LogicProgram, semantics: str = "stable") -> bool:
    return next(Completion(program).models(_acceptor(program, semantics, True)), None) is not None
