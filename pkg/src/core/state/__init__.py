__description__="CHR states, their canonical forms, structural equivalence and quantified conjunction"

from src.core.state.state import INCONSISTENT, CanonicalState, State, compose, pretty_state
from src.core.state.canonical import canonicalize, equivalent

__all__=["INCONSISTENT", "CanonicalState", "State", "compose", "pretty_state", "canonicalize", "equivalent"]
