"""Thin wrapper around an external clingo/clasp binary reading smodels input."""
from __future__ import annotations

import os
import re
import shutil
import subprocess
from dataclasses import dataclass

ENV_VAR = "RELAXLP_SOLVER"


@dataclass
class SolverResult:
    status: str  # "optimum", "satisfiable", "unsatisfiable", "unknown"
    atoms: tuple[str, ...] | None
    cost: int | None
    output: str


def find_solver(path: str | None = None) -> str | None:
    """Explicit path, then $RELAXLP_SOLVER, then ``clingo`` / ``clasp`` on PATH."""
    for cand in (path, os.environ.get(ENV_VAR), "clingo", "clasp"):
        if cand:
            found = shutil.which(cand)
            if found:
                return found
    return None


def run_solver(solver: str, smodels: bytes, supported: bool, timeout: float = 60.0) -> SolverResult:
    args = [solver, "--opt-mode=opt", "--quiet=1,0"]
    if os.path.basename(solver).startswith("clingo"):
        args.append("--mode=clasp")  # otherwise clingo expects text and grounds it
    if supported:
        args.append("--supp-models")
    proc = subprocess.run(args, input=smodels, capture_output=True, timeout=timeout)
    out = proc.stdout.decode()
    lines = out.splitlines()
    atoms = cost = None
    for i, line in enumerate(lines):
        # with --quiet=1 clasp announces each answer but prints atoms only for the last
        if line.startswith("Answer:") and i + 1 < len(lines) and not lines[i + 1].startswith("Optimization:"):
            atoms = tuple(lines[i + 1].split())
        m = re.match(r"Optimization:\s+(-?\d+)", line)
        if m:
            cost = int(m.group(1))
    if "UNSATISFIABLE" in out:
        status = "unsatisfiable"
    elif "OPTIMUM FOUND" in out:
        status = "optimum"
    elif "SATISFIABLE" in out:
        status = "satisfiable"
    else:
        status = "unknown"
    if status == "satisfiable" and cost is None:
        # no minimize statement: nothing to optimize, any model is optimal
        status, cost = "optimum", 0
    return SolverResult(status, atoms, cost, out)
