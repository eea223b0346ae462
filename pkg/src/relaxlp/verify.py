"""Per-instance checks of the correspondence between encodings and relaxed plans.

Each check compares model sets computed with :mod:`relaxlp.search` against
the brute-force oracle, or two encodings against each other.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

from . import oracle
from .encoding import action_atoms, actions_of, encode_acyc, encode_p, encode_pc, encode_pd, make_ordering
from .oracle import INF
from .program import Sym, action, state
from .search import projected_models, search_models
from .strips import RelaxedProblem, is_solvable


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def plan_image(problem: RelaxedProblem, subset) -> frozenset[Sym]:
    """Atoms of the stable model matching an action subset: the actions and everything they add."""
    out = set()
    for name in subset:
        out.add(action(name))
        out.update(state(p) for p in problem.action(name).add)
    return frozenset(out)


def subset_cost(problem: RelaxedProblem, subset) -> int:
    return sum(problem.action(n).cost for n in subset)


def min_cost(problem: RelaxedProblem, subsets) -> float:
    return min((subset_cost(problem, s) for s in subsets), default=INF)


def _fmt(subsets) -> str:
    return "{" + ", ".join("{" + ",".join(sorted(s)) + "}" for s in sorted(subsets, key=sorted)) + "}"


def support_orderable_subsets(problem: RelaxedProblem) -> set[frozenset[str]]:
    """Action subsets admitting an acyclic well-support assignment.

    ``A'`` qualifies iff some linear order of the atoms lets every action in
    ``A'`` support at least one of its adds placed after all of its
    preconditions, while every goal and every precondition of ``A'`` is
    supported this way.  This is the set of action projections that the
    supported-model encodings capture; it is contained in the plan subsets
    and has the same minimum cost.
    """
    atoms = problem.atoms
    acts = problem.actions
    m = len(acts)
    bit = {p: 1 << i for i, p in enumerate(atoms)}
    goal = sum(bit[g] for g in problem.goal)
    pre = [sum(bit[q] for q in a.pre) for a in acts]
    found: set[int] = set()
    for perm in permutations(range(len(atoms))):
        rank = {atoms[i]: r for r, i in enumerate(perm)}
        support = []
        for a in acts:
            top = max((rank[q] for q in a.pre), default=-1)
            support.append(sum(bit[p] for p in a.add if rank[p] > top))
        for mask in range(1 << m):
            if mask in found:
                continue
            covered = needed = 0
            ok = True
            for j in range(m):
                if mask >> j & 1:
                    if not support[j]:
                        ok = False
                        break
                    covered |= support[j]
                    needed |= pre[j]
            if ok and (needed | goal) & ~covered == 0:
                found.add(mask)
    return {frozenset(acts[j].name for j in range(m) if mask >> j & 1) for mask in found}


def verify_instance(problem: RelaxedProblem, orderings=("min-degree", "input-order"),
                    bound: int = oracle.DEFAULT_ACTION_BOUND, extended: bool = False) -> Report:
    """Run every correspondence check on one relaxed problem.

    ``extended`` adds the support-orderable characterisation (factorial in
    the number of atoms).
    """
    rep = Report()
    plans = oracle.plan_subsets(problem, bound)
    report = oracle.h_plus(problem, bound)
    acts = action_atoms(problem)

    rep.add("h+ = inf iff unsolvable", (report.h_plus == INF) == (not is_solvable(problem)))

    p_prog = encode_p(problem)
    stable = search_models(p_prog, "stable")
    images = {plan_image(problem, s) for s in plans}
    rep.add("plans: stable models of P = f(plan subsets)", set(stable) == images,
            f"{len(stable)} stable models, {len(images)} plan subsets")
    p_cost = min((sum(w for s, w in p_prog.minimize if s in m) for m in stable), default=INF)
    rep.add("h+ from P", p_cost == report.h_plus, f"model cost {p_cost}, oracle {report.h_plus}")

    acyc = encode_acyc(problem)
    sig_p = p_prog.signature
    acyc_proj = projected_models(acyc, sorted(sig_p, key=p_prog.handles.__getitem__), "acyclic-supported")
    same = acyc_proj == set(stable)
    detail = ""
    if not same:
        extra = [sorted(map(str, m)) for m in acyc_proj - set(stable)][:2]
        missing = [sorted(map(str, m)) for m in set(stable) - acyc_proj][:2]
        detail = f"not stable: {extra}; stable but missing: {missing}"
    rep.add("acyc: acyclic supported models of ACYC(P) on At(P) = stable models of P", same, detail)

    plan_sets = set(plans)
    for strategy in orderings:
        ordering = make_ordering(problem, strategy)
        pc = projected_models(encode_pc(problem, ordering), acts, "supported")
        pd = projected_models(encode_pd(problem, ordering), acts, "supported")
        pc_sets = {actions_of(m) for m in pc}
        pd_sets = {actions_of(m) for m in pd}
        rep.add(f"pc-plans [{strategy}]: action sets of P_c = plan subsets", pc_sets == plan_sets,
                f"P_c only {_fmt(pc_sets - plan_sets)}; plans only {_fmt(plan_sets - pc_sets)}")
        rep.add(f"pd-pc [{strategy}]: action sets of P_d = action sets of P_c", pd_sets == pc_sets,
                f"P_d only {_fmt(pd_sets - pc_sets)}; P_c only {_fmt(pc_sets - pd_sets)}")
        rep.add(f"pd-plans [{strategy}]: action sets of P_d = plan subsets", pd_sets == plan_sets,
                f"P_d only {_fmt(pd_sets - plan_sets)}; plans only {_fmt(plan_sets - pd_sets)}")
        rep.add(f"h+ from P_c [{strategy}]", min_cost(problem, pc_sets) == report.h_plus)
        rep.add(f"h+ from P_d [{strategy}]", min_cost(problem, pd_sets) == report.h_plus)
        rep.add(f"action sets of P_c within plan subsets [{strategy}]", pc_sets <= plan_sets)
        if extended:
            rep.add(f"action sets of P_c = support-orderable subsets [{strategy}]",
                    pc_sets == support_orderable_subsets(problem))
    return rep
