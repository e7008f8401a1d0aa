# run one confluence criterion with the limits and options of a config

from collections.abc import Sequence
from src.config.analysis_config import AnalysisConfig
from src.config.logger import get_logger
from src.config.settings import settings
from src.core.analysis.criteria import (
    check_local_confluence,
    check_modularity,
    check_rule_decreasing,
    check_strong_confluence,
)
from src.core.analysis.report import Report
from src.core.errors import ChrdcError, ContractError
from src.core.syntax.ast import Program

MODES = ("local", "strong", "decreasing", "modular")

def check(mode: str, programs: Sequence[Program], config: AnalysisConfig | None = None,
          max_depth: int | None = None, max_states: int | None = None) -> Report:
    logger = get_logger("job-check")
    config = config or AnalysisConfig()

    if mode not in MODES:
        raise ContractError(f"unknown mode '{mode}', expected one of {', '.join(MODES)}")
    wanted = 2 if mode == "modular" else 1
    if len(programs) != wanted:
        raise ContractError(f"mode {mode} takes {wanted} program(s), got {len(programs)}")

    try:
        config.validate(*programs)
        budget = config.budget(settings(), max_depth, max_states)
        program = programs[0]
        logger.info(f"checking {mode} with depth {budget.max_depth} and {budget.max_states} states")

        if mode == "local":
            report = check_local_confluence(program, budget, config.assume_terminating)
        elif mode == "strong":
            report = check_strong_confluence(program, budget)
        elif mode == "modular":
            report = check_modularity(programs[0], programs[1], budget)
        else:
            partition = config.partition(program)
            report = check_rule_decreasing(
                program,
                partition,
                order=config.preorder(partition),
                budget=budget,
                tactics=config.tactic_map(),
                assume_terminating=config.assume_terminating,
                enumerate_orders=config.enumerate_orders,
            )
    except ChrdcError as e:
        logger.error(f"error while checking {mode} - {e}")
        raise

    return report

def exit_code(report: Report) -> int:
    return 0 if report.established else 1
