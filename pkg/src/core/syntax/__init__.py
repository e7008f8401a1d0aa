__description__="CHR program and state syntax: AST, parser and pretty printer"

from src.core.syntax.ast import FALSE, Atom, Builtin, Equation, Falsity, Program, Rule, RuleKind
from src.core.syntax.parser import parse_program, parse_state
from src.core.syntax.pretty import pretty

__all__=["FALSE", "Atom", "Builtin", "Equation", "Falsity", "Program", "Rule", "RuleKind",
         "parse_program", "parse_state", "pretty"]
