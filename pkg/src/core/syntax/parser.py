# source text -> Program / State

from __future__ import annotations

from functools import lru_cache

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from src.config.logger import get_logger
from src.core.errors import ParseError
from src.core.syntax.ast import FALSE, Atom, Equation, Falsity, Program, Rule
from src.core.terms.rename import is_reserved
from src.core.terms.term import Compound, Var

_TOP = object()


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark.open(
        "chr.lark",
        rel_to=__file__,
        start=["program", "query"],
        parser="earley",
        propagate_positions=True,
        maybe_placeholders=True,
    )


def _where(meta) -> tuple[int | None, int | None]:
    if meta is None or getattr(meta, "empty", True):
        return None, None
    return meta.line, meta.column


@v_args(meta=True)
class _Builder(Transformer):
    def __init__(self, program: Program | None = None):
        super().__init__()
        self.predicates: dict[str, int] = {}
        self.functors: dict[str, int] = {}
        self.rule_names: set[str] = set()
        if program is not None:
            for rule in program:
                for atom in rule.heads + rule.user_body:
                    self.predicates.setdefault(atom.predicate, atom.arity)
                    self._seed_functors(atom.args)
                for b in rule.guard + rule.builtin_body:
                    if isinstance(b, Equation):
                        self._seed_functors((b.lhs, b.rhs))

    def _seed_functors(self, terms) -> None:
        stack = list(terms)
        while stack:
            t = stack.pop()
            if isinstance(t, Compound):
                self.functors.setdefault(t.functor, len(t.args))
                stack.extend(t.args)

    def _check_arity(self, table: dict[str, int], kind: str, name: str, arity: int, meta) -> None:
        known = table.setdefault(name, arity)
        if known != arity:
            raise ParseError(f"{kind} '{name}' used with arity {arity} and {known}", *_where(meta))

    # terms

    def var(self, meta, children):
        name = str(children[0])
        if is_reserved(name):
            raise ParseError(f"variable '{name}' uses the reserved prefix", children[0].line, children[0].column)
        return Var(name)

    def integer(self, meta, children):
        return Compound(str(children[0]))

    def compound(self, meta, children):
        name, args = str(children[0]), children[1] or ()
        self._check_arity(self.functors, "functor", name, len(args), meta)
        return Compound(name, args)

    def plus(self, meta, children):
        self._check_arity(self.functors, "functor", "+", 2, meta)
        return Compound("+", (children[0], children[1]))

    def terms(self, meta, children):
        return tuple(children)

    # constraints

    def atom(self, meta, children):
        name, args = str(children[0]), children[1] or ()
        if name in ("true", "false") and args:
            raise ParseError(f"'{name}' takes no arguments", *_where(meta))
        if name not in ("true", "false"):
            self._check_arity(self.predicates, "predicate", name, len(args), meta)
        return Atom(name, args)

    def goal(self, meta, children):
        atom = children[0]
        if atom.predicate == "true":
            return _TOP
        if atom.predicate == "false":
            return FALSE
        return atom

    def equation(self, meta, children):
        return Equation(children[0], children[1])

    def goals(self, meta, children):
        return [g for g in children if g is not _TOP]

    def atoms(self, meta, children):
        for atom in children:
            if atom.predicate in ("true", "false"):
                raise ParseError(f"'{atom.predicate}' cannot appear in a head", *_where(meta))
        return tuple(children)

    # rules

    def kept_removed(self, meta, children):
        return children[0], children[1]

    def removed_only(self, meta, children):
        return (), children[0]

    def no_heads(self, meta, children):
        return (), ()

    def guarded(self, meta, children):
        guard, body = children
        for g in guard:
            if isinstance(g, Atom):
                raise ParseError(f"guard may only hold built-in constraints, found '{g.predicate}'", *_where(meta))
        return tuple(guard), body

    def unguarded(self, meta, children):
        return (), children[0]

    def _rule(self, meta, name, kept, removed, body) -> Rule:
        guard, goals = body
        if not kept and not removed:
            raise ParseError(f"rule '{name}' has an empty head", *_where(meta))
        if str(name) in self.rule_names:
            raise ParseError(f"duplicate rule name '{name}'", *_where(meta))
        self.rule_names.add(str(name))
        user = tuple(g for g in goals if isinstance(g, Atom))
        builtin = tuple(g for g in goals if isinstance(g, (Equation, Falsity)))
        return Rule(str(name), tuple(kept), tuple(removed), guard, user, builtin)

    def simplification(self, meta, children):
        name, (kept, removed), body = children
        return self._rule(meta, name, kept, removed, body)

    def propagation(self, meta, children):
        name, kept, body = children
        return self._rule(meta, name, kept, (), body)

    def program(self, meta, children):
        return Program(tuple(children))

    # queries

    def globals(self, meta, children):
        names = []
        for tok in children:
            if tok is None:
                continue
            if is_reserved(str(tok)):
                raise ParseError(f"variable '{tok}' uses the reserved prefix", tok.line, tok.column)
            names.append(str(tok))
        return frozenset(names)

    def plain_query(self, meta, children):
        from src.core.state.state import State

        goals, declared = children
        goals = goals or []
        user = tuple(g for g in goals if isinstance(g, Atom))
        builtin = tuple(g for g in goals if isinstance(g, (Equation, Falsity)))
        if declared is None:
            declared = frozenset(v for g in goals for v in g.variables())
        return State(user, builtin, declared)

    def inconsistent_query(self, meta, children):
        from src.core.state.state import State

        return State((), (FALSE,), frozenset())


def _parse(text: str, start: str, builder: _Builder):
    try:
        tree = _parser().parse(text, start=start)
        return builder.transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, ParseError):
            raise e.orig_exc from None
        raise
    except UnexpectedEOF as e:
        lines = text.splitlines() or [""]
        raise ParseError("unexpected end of input", len(lines), len(lines[-1]) + 1) from None
    except UnexpectedInput as e:
        raise ParseError("unexpected input", e.line, e.column) from None


def parse_program(text: str) -> Program:
    logger = get_logger("parse_program")
    logger.debug(f"parsing program of {len(text)} characters")

    try:
        program = _parse(text, "program", _Builder())
    except ParseError as e:
        logger.error(f"failed to parse program - {e}")
        raise

    logger.info(f"parsed {len(program)} rules")
    return program


def parse_state(text: str, program: Program | None = None):
    """Parse `goals [# globals: X, Y]`; globals default to every free variable of the goals."""
    logger = get_logger("parse_state")

    try:
        state = _parse(text, "query", _Builder(program))
    except ParseError as e:
        logger.error(f"failed to parse state - {e}")
        raise

    return state
