# seeded random terms, states and programs for the property suites

import numpy as np
from src.core.state.state import State
from src.core.syntax.ast import Atom, Equation, Program, Rule
from src.core.terms.term import Compound, Var, const

VARIABLES = ("X", "Y", "Z", "W")
CONSTANTS = ("a", "b")

def random_term(rng: np.random.Generator, depth: int = 1):
    roll = rng.random()
    if depth == 0 or roll < 0.6:
        if rng.random() < 0.7:
            return Var(VARIABLES[rng.integers(len(VARIABLES))])
        return const(CONSTANTS[rng.integers(len(CONSTANTS))])
    return Compound("f", (random_term(rng, depth - 1),))

def random_atom(rng: np.random.Generator) -> Atom:
    if rng.random() < 0.5:
        return Atom("p", (random_term(rng),))
    return Atom("q", (random_term(rng), random_term(rng)))

def random_state(rng: np.random.Generator, max_atoms: int = 4, max_equations: int = 2) -> State:
    atoms = tuple(random_atom(rng) for _ in range(int(rng.integers(0, max_atoms + 1))))
    equations = tuple(Equation(random_term(rng), random_term(rng))
                      for _ in range(int(rng.integers(0, max_equations + 1))))
    globals_ = frozenset(v for v in VARIABLES if rng.random() < 0.4)
    return State(atoms, equations, globals_)

def permuted(rng: np.random.Generator, state: State) -> State:
    order = rng.permutation(len(state.user_store))
    return State(tuple(state.user_store[i] for i in order), state.builtin_store, state.globals)

def renamed_locals(state: State, suffix: str = "r") -> State:
    ren = {v: Var(f"{v}{suffix}") for v in state.local_variables}
    return State(
        tuple(a.substitute(ren) for a in state.user_store),
        tuple(b.substitute(ren) for b in state.builtin_store),
        state.globals,
    )

def random_rule(rng: np.random.Generator, name: str) -> Rule:
    heads = tuple(random_atom(rng) for _ in range(int(rng.integers(1, 3))))
    kept_count = int(rng.integers(0, len(heads) + 1))
    body = tuple(random_atom(rng) for _ in range(int(rng.integers(0, 2))))
    builtin = (Equation(random_term(rng), random_term(rng)),) if rng.random() < 0.3 else ()
    return Rule(name, heads[:kept_count], heads[kept_count:], (), body, builtin)

def random_program(rng: np.random.Generator, size: int = 2) -> Program:
    return Program(tuple(random_rule(rng, f"r{i}") for i in range(size)))
