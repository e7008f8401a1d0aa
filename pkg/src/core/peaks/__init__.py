__description__="critical peaks of CHR programs: superposition of rule heads, deduplication and classification"

from src.core.peaks.peak import CriticalPeak, Overlap, classify, parse_selector
from src.core.peaks.generate import critical_peaks, peak_census

__all__=["CriticalPeak", "Overlap", "classify", "parse_selector", "critical_peaks", "peak_census"]
