__description__="joinability search, the decreasing-diagram check and the confluence criteria"

from src.core.analysis.verdict import PeakStatus, PeakVerdict, SearchBudget, Valley
from src.core.analysis.star import matches_star
from src.core.analysis.patterns import AnyPattern, ModularPattern, Pattern, Side, SingleStepPattern, StarPattern, TacticPattern
from src.core.analysis.join import join_search
from src.core.analysis.report import Criterion, Outcome, Record, Report, parse_machine_report, render_machine, render_text
from src.core.analysis.criteria import check_local_confluence, check_modularity, check_rule_decreasing, check_strong_confluence

__all__=["PeakStatus", "PeakVerdict", "SearchBudget", "Valley", "matches_star",
         "AnyPattern", "ModularPattern", "Pattern", "Side", "SingleStepPattern", "StarPattern", "TacticPattern",
         "join_search", "Criterion", "Outcome", "Record", "Report", "parse_machine_report", "render_machine",
         "render_text", "check_local_confluence", "check_modularity", "check_rule_decreasing",
         "check_strong_confluence"]
