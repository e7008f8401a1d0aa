__description__="first-order terms, substitutions and syntactic unification over the Herbrand theory"

from src.core.terms.term import Compound, Term, Var, const
from src.core.terms.substitution import EMPTY, Substitution, apply
from src.core.terms.unify import match, unify
from src.core.terms.rename import RESERVED_PREFIX, FreshNames, rename_apart

__all__=["Compound", "Term", "Var", "const", "EMPTY", "Substitution", "apply", "match", "unify",
         "RESERVED_PREFIX", "FreshNames", "rename_apart"]
