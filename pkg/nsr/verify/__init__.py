from .context import CheckContext
from .harness import build_suite, emit_report, exit_code, run_check, run_suite
from .registry import CheckEntry, CheckKind, all_entries, get_entry, register
from .sampling import Constraints, ParamSampler, sample_params

__all__ = [
    "CheckContext",
    "CheckEntry",
    "CheckKind",
    "Constraints",
    "ParamSampler",
    "all_entries",
    "build_suite",
    "emit_report",
    "exit_code",
    "get_entry",
    "register",
    "run_check",
    "run_suite",
    "sample_params",
]
