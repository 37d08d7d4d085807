"""Law catalog and small-model sweeps."""

from relpaths.theorems.catalog import LAWS, MUTANTS, Law, Var, all_ids, get_law
from relpaths.theorems.sweep import (
    CheckResult,
    Status,
    SuiteReport,
    check_law,
    check_sweep,
    enumerate_relations,
    evaluate,
    replay,
    run_suite,
    select_laws,
)

__all__ = [
    "LAWS",
    "MUTANTS",
    "Law",
    "Var",
    "all_ids",
    "get_law",
    "CheckResult",
    "Status",
    "SuiteReport",
    "check_law",
    "check_sweep",
    "enumerate_relations",
    "evaluate",
    "replay",
    "run_suite",
    "select_laws",
]
