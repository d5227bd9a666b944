"""Seeded law suites and their JSON reports."""

from .laws import (
    EXTRA_SUITES,
    SUITES,
    Law,
    LawReport,
    LawResult,
    SuiteConfig,
    replay,
    report_json,
    run_suite,
)

__all__ = [
    "EXTRA_SUITES", "SUITES", "Law", "LawReport", "LawResult", "SuiteConfig",
    "replay", "report_json", "run_suite",
]
