__description__="labeled transitions of the equivalence-based semantics, replay and bounded search"

from src.core.engine.step import Derivation, LabeledStep
from src.core.engine.transition import applicable_steps, apply_step, replay
from src.core.engine.search import Reachability, reachable, run_trace

__all__=["Derivation", "LabeledStep", "applicable_steps", "apply_step", "replay",
         "Reachability", "reachable", "run_trace"]
