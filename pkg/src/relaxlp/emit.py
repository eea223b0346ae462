"""Serialization of ground programs: ASP text and the smodels numeric format.

Text form::

    p :- not p.
    {a} :- p.
    q :- a.
    #minimize { 1,a : a; 1,b : b }.

smodels form: rule lines (1 basic, 3 choice, 6 minimize), ``0``, the symbol
table (``num name``), ``0``, empty ``B+``/``B-`` blocks each closed by
``0``, and the model count ``1``.  Both readers recover action atoms from
the minimize statement, which lists every action.
"""
from __future__ import annotations

import re
from collections import Counter

from .program import LogicProgram, Rule, Sym, parse_sym

MAX_ATOMS = 2**31 - 1
SOLVER_FLAGS = {
    "p": "clingo --opt-mode=opt",
    "acyc": "clingo --supp-models --opt-mode=opt",
    "pc": "clingo --supp-models --opt-mode=opt",
    "pd": "clingo --supp-models --opt-mode=opt",
}


class FormatError(ValueError):
    pass


# -- text --------------------------------------------------------------------

def emit_text(program: LogicProgram, header: list[str] | tuple[str, ...] = ()) -> str:
    lines = [f"% {h}" for h in header]
    lines.extend(str(r) for r in program.rules)
    if program.minimize:
        items = "; ".join(f"{w},{s} : {s}" for s, w in program.minimize)
        lines.append(f"#minimize {{ {items} }}.")
    return "".join(line + "\n" for line in lines)


_MINIMIZE = re.compile(r"#minimize\s*\{(.*)\}\s*\.\Z")
_ITEM = re.compile(r"\s*(\d+)\s*,\s*(\S+?)\s*:\s*(\S+?)\s*\Z")
_RULE = re.compile(r"(\{)?\s*([^\s{}:]+?)\s*(\})?\s*(?::-(.*))?\.\Z")
_ATOM = r"(?:ws|dep)\([^()]*\)|[A-Za-z0-9_-]+"


def _split_body(body: str) -> list[str]:
    return [m.group().strip() for m in re.finditer(rf"(?:not\s+)?(?:{_ATOM})", body)]


def parse_text(text: str) -> LogicProgram:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    weights: list[tuple[str, int]] = []
    rule_lines = []
    for lineno, line in lines:
        m = _MINIMIZE.match(line)
        if not m:
            rule_lines.append((lineno, line))
            continue
        for item in filter(str.strip, m.group(1).split(";")):
            im = _ITEM.match(item)
            if not im or im.group(2) != im.group(3):
                raise FormatError(f"line {lineno}: malformed minimize element {item.strip()!r}")
            weights.append((im.group(2), int(im.group(1))))
    actions = {name for name, _ in weights}
    rules = []
    for lineno, line in rule_lines:
        m = _RULE.match(line)
        if not m or bool(m.group(1)) != bool(m.group(3)):
            raise FormatError(f"line {lineno}: cannot parse rule {line!r}")
        head = parse_sym(m.group(2), actions)
        pos, neg = [], []
        body = m.group(4)
        if body is not None:
            parts = _split_body(body)
            if re.sub(r"[\s,]", "", body) != re.sub(r"[\s,]", "", "".join(parts)):
                raise FormatError(f"line {lineno}: cannot parse body {body.strip()!r}")
            for part in parts:
                if part.startswith("not "):
                    neg.append(parse_sym(part[4:].strip(), actions))
                else:
                    pos.append(parse_sym(part, actions))
        rules.append(Rule(head, tuple(pos), tuple(neg), choice=bool(m.group(1))))
    minimize = tuple((parse_sym(n, actions), w) for n, w in weights)
    return LogicProgram(tuple(rules), minimize)


# -- smodels -----------------------------------------------------------------

def symbol_table(program: LogicProgram) -> dict[int, str]:
    return {h: str(s) for s, h in program.handles.items()}


def format_symbol_table(table: dict[int, str]) -> str:
    return "".join(f"{num} {name}\n" for num, name in sorted(table.items()))


def emit_smodels(program: LogicProgram) -> tuple[bytes, dict[int, str]]:
    h = program.handles
    if len(h) > MAX_ATOMS:
        raise ValueError(f"{len(h)} atoms do not fit the smodels format")
    out = []
    for r in program.rules:
        neg = [h[c] for c in r.neg]
        pos = [h[b] for b in r.pos]
        body = [len(neg) + len(pos), len(neg), *neg, *pos]
        if r.choice:
            out.append([3, 1, h[r.head], *body])
        else:
            out.append([1, h[r.head], *body])
    if program.minimize:
        lits = [h[s] for s, _ in program.minimize]
        out.append([6, 0, len(lits), 0, *lits, *(w for _, w in program.minimize)])
    table = symbol_table(program)
    text = "".join(" ".join(map(str, row)) + "\n" for row in out)
    text += "0\n" + format_symbol_table(table) + "0\nB+\n0\nB-\n0\n1\n"
    return text.encode("ascii"), table


def parse_smodels(data: bytes | str) -> tuple[LogicProgram, dict[int, str]]:
    text = data.decode("ascii") if isinstance(data, bytes) else data
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    pos = 0
    raw_rules = []
    minimize_raw = None
    while True:
        if pos >= len(lines):
            raise FormatError("missing rule section terminator")
        nums = [int(x) for x in lines[pos].split()]
        pos += 1
        if nums == [0]:
            break
        kind = nums[0]
        if kind == 1:
            raw_rules.append((False, nums[1], nums[2:]))
        elif kind == 3:
            if nums[1] != 1:
                raise FormatError("only single-head choice rules are supported")
            raw_rules.append((True, nums[2], nums[3:]))
        elif kind == 6:
            if nums[1] != 0 or minimize_raw is not None:
                raise FormatError("expected a single minimize statement with priority 0")
            minimize_raw = nums[2:]
        else:
            raise FormatError(f"unsupported rule type {kind}")
    table: dict[int, str] = {}
    while True:
        if pos >= len(lines):
            raise FormatError("missing symbol table terminator")
        line = lines[pos]
        pos += 1
        if line == "0":
            break
        num, name = line.split(" ", 1)
        table[int(num)] = name
    if lines[pos:] != ["B+", "0", "B-", "0", "1"]:
        raise FormatError("unexpected compute/model-count trailer")

    weights = []
    if minimize_raw is not None:
        n, nneg = minimize_raw[0], minimize_raw[1]
        if nneg:
            raise FormatError("negative minimize literals are not supported")
        atoms = minimize_raw[2:2 + n]
        ws_ = minimize_raw[2 + n:]
        if len(ws_) != n:
            raise FormatError("minimize weight count mismatch")
        weights = list(zip(atoms, ws_))
    actions = {table[a] for a, _ in weights}
    syms = {num: parse_sym(name, actions) for num, name in table.items()}

    def body(nums):
        n, nneg = nums[0], nums[1]
        lits = nums[2:]
        if len(lits) != n:
            raise FormatError("body literal count mismatch")
        return tuple(syms[x] for x in lits[nneg:]), tuple(syms[x] for x in lits[:nneg])

    rules = []
    for choice, head, nums in raw_rules:
        p, n = body(nums)
        rules.append(Rule(syms[head], p, n, choice))
    minimize = tuple((syms[a], w) for a, w in weights)
    order = tuple(syms[k] for k in sorted(syms))
    return LogicProgram(tuple(rules), minimize, order), table


def rule_multiset(program: LogicProgram) -> Counter:
    """Order-insensitive view of a program, keyed on rendered atom names."""
    return Counter(
        (r.choice, str(r.head), frozenset(map(str, r.pos)), frozenset(map(str, r.neg)))
        for r in program.rules
    )


def minimize_set(program: LogicProgram) -> frozenset[tuple[str, int]]:
    return frozenset((str(s), w) for s, w in program.minimize)


def read_model(text: str, program: LogicProgram) -> frozenset[Sym]:
    """Parse a whitespace-separated atom list against ``program``'s atoms."""
    by_name = {str(s): s for s in program.order}
    out = set()
    for tok in text.split():
        if tok not in by_name:
            raise KeyError(tok)
        out.add(by_name[tok])
    return frozenset(out)


def format_model(model, program: LogicProgram) -> str:
    h = program.handles
    return " ".join(str(s) for s in sorted(model, key=h.__getitem__))
