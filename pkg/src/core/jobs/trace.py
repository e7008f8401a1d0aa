# bounded execution of a query, first applicable step each time

from src.config.logger import get_logger
from src.core.engine.search import run_trace
from src.core.engine.step import Derivation
from src.core.errors import ChrdcError, ContractError
from src.core.syntax.ast import Program
from src.core.syntax.parser import parse_state

def trace(program: Program, query: str, steps: int) -> Derivation:
    logger = get_logger("job-trace")

    if steps < 0:
        raise ContractError(f"steps must be >= 0, got {steps}")

    try:
        state = parse_state(query, program)
        derivation = run_trace(program, state, steps)
    except ChrdcError as e:
        logger.error(f"error while tracing query - {e}")
        raise

    end = "reached a fixpoint" if derivation.fixpoint else "hit the step limit"
    logger.info(f"trace {end} after {len(derivation)} of {steps} steps")
    return derivation
