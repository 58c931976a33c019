"""Search driver, seeded suites, JSONL reports and the command line."""

from .config import SUITE_NAMES, SearchConfig, load_config
from .report import RunManifest, VerifyResult, read_report, run_search_report, verify_report
from .search import SearchStats, Searcher, search, solution_record
from .suites import SuiteOutcome, run_suite, run_suites

__all__ = [
    "SUITE_NAMES",
    "SearchConfig",
    "load_config",
    "RunManifest",
    "VerifyResult",
    "read_report",
    "run_search_report",
    "verify_report",
    "SearchStats",
    "Searcher",
    "search",
    "solution_record",
    "SuiteOutcome",
    "run_suite",
    "run_suites",
]
