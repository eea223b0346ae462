"""Command line: encode, hplus, check-model, verify, stats.

Exit codes: 0 success, 1 parse/validation error (or failed verification),
2 I/O error, 3 enumeration/oracle bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import oracle
from .emit import SOLVER_FLAGS, emit_smodels, emit_text, format_model, format_symbol_table, read_model
from .encoding import ENCODINGS, ORDERINGS, actions_of, dependency_skeleton, encode, make_ordering
from .generate import InstanceShape, random_relaxed
from .graph import eliminate
from .program import SEMANTICS, check, is_acyclic, is_model, is_stable, is_supported
from .solver import find_solver, run_solver
from .strips import ProblemError, RelaxedProblem, is_solvable, parse_problem, relax
from .verify import plan_image, verify_instance

EXIT_OK, EXIT_INVALID, EXIT_IO, EXIT_BOUND = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _err(*parts) -> None:
    print(*parts, file=sys.stderr)


def load(path: str) -> RelaxedProblem:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO)
    try:
        return relax(parse_problem(text))
    except ProblemError as exc:
        raise CliError(f"{path}: {exc}", EXIT_INVALID)


def _write(path: str, data: bytes | str) -> None:
    try:
        if isinstance(data, str):
            Path(path).write_text(data, encoding="utf-8", newline="\n")
        else:
            Path(path).write_bytes(data)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}", EXIT_IO)


def _summary(problem: RelaxedProblem, program, args) -> dict:
    info = {"encoding": args.encoding, "rules": len(program.rules), "atoms": len(program.atoms)}
    if args.encoding in ("pc", "pd"):
        result = eliminate(dependency_skeleton(problem).graph, make_ordering(problem, args.ordering))
        info.update(ordering=args.ordering, fill_in=len(result.fill_in),
                    two_cycles=len(result.two_cycle_pairs))
    return info


def cmd_encode(args) -> int:
    problem = load(args.input)
    program = encode(problem, args.encoding, args.ordering)
    if not is_solvable(problem):
        _err("warning: goal not reachable; the encoding has no model")
    if args.format == "text":
        header = [f"encoding {args.encoding}; solve with: {SOLVER_FLAGS[args.encoding]}"]
        payload: bytes | str = emit_text(program, header)
        table = {h: str(s) for s, h in program.handles.items()}
    else:
        payload, table = emit_smodels(program)
    if args.output:
        _write(args.output, payload)
    elif isinstance(payload, bytes):
        sys.stdout.buffer.write(payload)
    else:
        sys.stdout.write(payload)
    if args.map:
        _write(args.map, format_symbol_table(table))
    info = _summary(problem, program, args)
    _err(json.dumps(info) if args.json else " ".join(f"{k}={v}" for k, v in info.items()))

    if args.solver is not None:
        solver = find_solver(args.solver or None)
        if solver is None:
            _err("note: no solver found; skipping solve")
            return EXIT_OK
        data, _ = emit_smodels(program)
        res = run_solver(solver, data, supported=args.encoding != "p")
        _err(f"solver: {res.status}" + (f" cost={res.cost}" if res.cost is not None else ""))
        if res.atoms is not None:
            model = read_model(" ".join(res.atoms), program)
            semantics = "stable" if args.encoding == "p" else "supported"
            for line in _model_report(problem, program, args.encoding, semantics, model):
                _err(line)
    return EXIT_OK


def cmd_hplus(args) -> int:
    problem = load(args.input)
    try:
        report = oracle.h_plus(problem, args.bound)
    except oracle.TooManyActions as exc:
        raise CliError(str(exc), EXIT_BOUND)
    value = oracle.format_h_plus(report.h_plus)
    if args.json:
        print(json.dumps({"h_plus": value, "plan": list(report.witness_plans[0]) if report.witness_plans else None}))
        return EXIT_OK
    print(value)
    if args.plan and report.witness_plans:
        for name in report.witness_plans[0]:
            print(name)
    return EXIT_OK


def _model_report(problem, program, encoding, semantics, model) -> list[str]:
    lines = []
    ok = check(program, model, semantics)
    if ok:
        lines.append(f"valid {semantics} model")
    else:
        reasons = []
        if not is_model(program, model):
            reasons.append("violates a rule")
        elif semantics == "stable" and not is_stable(program, model):
            reasons.append("not stable" + (" (supported only)" if is_supported(program, model) else ""))
        elif not is_supported(program, model):
            reasons.append("not supported")
        elif semantics == "acyclic-supported" and not is_acyclic(model):
            reasons.append("dependency cycle")
        lines.append(f"invalid {semantics} model: {', '.join(reasons)}")
        if semantics == "stable" and is_supported(program, model):
            lines.append("valid supported model")
    subset = actions_of(model)
    names = [a.name for a in problem.actions if a.name in subset]
    lines.append("actions: " + " ".join(names))
    plan = oracle.orderable(problem, subset)
    if plan is None:
        lines.append("orderable: no")
    else:
        lines.append("orderable: " + " ".join(plan))
        lines.append("goal reached: " + ("yes" if oracle.achieves_goal(problem, plan) else "no"))
    if encoding == "p":
        lines.append("f(A') matches model: " + ("yes" if plan_image(problem, subset) == model else "no"))
    return lines


def cmd_check_model(args) -> int:
    problem = load(args.input)
    program = encode(problem, args.encoding, args.ordering)
    try:
        text = Path(args.model).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {args.model}: {exc.strerror}", EXIT_IO)
    try:
        model = read_model(text, program)
    except KeyError as exc:
        raise CliError(f"unknown atom {exc.args[0]!r} in model file", EXIT_INVALID)
    lines = _model_report(problem, program, args.encoding, args.semantics, model)
    if args.json:
        print(json.dumps({"valid": check(program, model, args.semantics), "report": lines}))
    else:
        print("\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    jobs = []
    if args.input:
        jobs.append((args.input, load(args.input)))
    else:
        shape = InstanceShape(args.atoms, args.actions, args.max_cost, args.density)
        for seed in range(args.seed, args.seed + args.count):
            jobs.append((f"seed {seed}", random_relaxed(seed, shape)))
    all_ok = True
    summary = []
    for label, problem in jobs:
        if len(problem.actions) > args.bound:
            raise CliError(f"{label}: {len(problem.actions)} actions exceed the bound {args.bound}", EXIT_BOUND)
        rep = verify_instance(problem, bound=args.bound, extended=args.extended)
        all_ok &= rep.passed
        summary.append({"instance": label, "passed": rep.passed,
                        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in rep.checks]})
        if not args.json:
            for c in rep.checks:
                if not args.quiet or not c.passed:
                    extra = f"  ({c.detail})" if c.detail and not c.passed else ""
                    print(f"{label}: {'PASS' if c.passed else 'FAIL'} {c.name}{extra}")
    if args.json:
        print(json.dumps({"passed": all_ok, "instances": summary}))
    else:
        n_ok = sum(s["passed"] for s in summary)
        print(f"{n_ok}/{len(summary)} instances passed every check")
    return EXIT_OK if all_ok else EXIT_INVALID


def cmd_stats(args) -> int:
    problem = load(args.input)
    skel = dependency_skeleton(problem)
    ordering = make_ordering(problem, args.ordering)
    result = eliminate(skel.graph, ordering)
    info = {
        "atoms": len(problem.atoms), "actions": len(problem.actions),
        "dependency_arcs": len(skel.pairs), "ordering": " ".join(map(str, ordering.order)),
        "fill_in": len(result.fill_in), "two_cycle_pairs": len(result.two_cycle_pairs),
        "width": result.width, "solvable": is_solvable(problem),
    }
    if args.json:
        print(json.dumps(info))
    else:
        for k, v in info.items():
            print(f"{k}: {v}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="relaxlp", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, ordering=True):
        p.add_argument("input")
        p.add_argument("--json", action="store_true", help="machine-readable summary")
        if ordering:
            p.add_argument("--ordering", choices=ORDERINGS, default="min-degree")

    p = sub.add_parser("encode", help="emit a logic-program encoding")
    common(p)
    p.add_argument("--encoding", choices=ENCODINGS, default="pd")
    p.add_argument("--format", choices=("text", "smodels"), default="text")
    p.add_argument("-o", "--output")
    p.add_argument("--map", help="write the symbol table (num name lines) here")
    p.add_argument("--solver", nargs="?", const="", default=None,
                   help="run an external solver on the result (path, or $RELAXLP_SOLVER / PATH)")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("hplus", help="exact h+ by subset enumeration")
    common(p, ordering=False)
    p.add_argument("--plan", action="store_true", help="also print a witness plan")
    p.add_argument("--bound", type=int, default=oracle.DEFAULT_ACTION_BOUND)
    p.set_defaults(func=cmd_hplus)

    p = sub.add_parser("check-model", help="check a model file against an encoding")
    common(p)
    p.add_argument("--encoding", choices=ENCODINGS, default="p")
    p.add_argument("--semantics", choices=SEMANTICS, default="stable")
    p.add_argument("model")
    p.set_defaults(func=cmd_check_model)

    p = sub.add_parser("verify", help="check the encoding/plan correspondence on instances")
    p.add_argument("input", nargs="?")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--atoms", type=int, default=6)
    p.add_argument("--actions", type=int, default=6)
    p.add_argument("--max-cost", type=int, default=3)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--bound", type=int, default=oracle.DEFAULT_ACTION_BOUND)
    p.add_argument("--extended", action="store_true", help="also compare against support-orderable subsets")
    p.add_argument("-q", "--quiet", action="store_true", help="only print failing checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="dependency graph and elimination statistics")
    common(p)
    p.set_defaults(func=cmd_stats)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        _err(f"error: {exc}")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
