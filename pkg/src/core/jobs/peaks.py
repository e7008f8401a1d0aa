# list the critical peaks of one program, or the cross peaks of two

from collections.abc import Sequence
from src.config.analysis_config import AnalysisConfig
from src.config.logger import get_logger
from src.core.analysis.report import Criterion, Outcome, Report
from src.core.errors import ChrdcError, ContractError
from src.core.peaks.generate import peak_census
from src.core.syntax.ast import Program

def list_peaks(programs: Sequence[Program], config: AnalysisConfig | None = None) -> Report:
    logger = get_logger("job-peaks")
    config = config or AnalysisConfig()

    if len(programs) not in (1, 2):
        raise ContractError(f"peaks takes one or two programs, got {len(programs)}")

    try:
        config.validate(*programs)
        p, q = programs[0], programs[-1]
        partition = config.partition(p) if len(programs) == 1 else None
        peaks, trivial = peak_census(p, q, partition)
    except ChrdcError as e:
        logger.error(f"error while listing peaks - {e}")
        raise

    logger.info(f"listed {len(peaks)} peaks")
    return Report(Criterion.PEAKS, Outcome.LISTED, peaks=tuple(peaks), trivial_peaks=trivial, partition=partition)
