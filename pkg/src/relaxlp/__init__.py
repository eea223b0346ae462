"""Delete-free STRIPS planning as logic programs under stable and supported semantics."""
from .encoding import encode, encode_acyc, encode_p, encode_pc, encode_pd
from .oracle import h_plus, orderable
from .program import LogicProgram, Rule, Sym
from .strips import parse_problem, relax

__all__ = [
    "LogicProgram", "Rule", "Sym", "encode", "encode_acyc", "encode_p", "encode_pc", "encode_pd",
    "h_plus", "orderable", "parse_problem", "relax",
]
