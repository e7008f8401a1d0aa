__description__="inductive/coinductive partitions, rule preorders, admissibility and the termination measure"

from src.core.orders.partition import Partition, PeakKind
from src.core.orders.preorder import Admissibility, RulePreorder, candidate_orders, is_admissible, preorders_on
from src.core.orders.termination import TerminationResult, TerminationStatus, check_inductive_termination

__all__=["Partition", "PeakKind", "Admissibility", "RulePreorder", "candidate_orders", "is_admissible",
         "preorders_on", "TerminationResult", "TerminationStatus", "check_inductive_termination"]
