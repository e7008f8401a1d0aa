__description__="entry points shared by the command line and the http api"

from src.core.jobs.peaks import list_peaks
from src.core.jobs.check import MODES, check as run_check, exit_code
from src.core.jobs.trace import trace as run_trace

__all__=["list_peaks", "MODES", "run_check", "exit_code", "run_trace"]
