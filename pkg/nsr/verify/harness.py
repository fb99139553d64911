"""Running registered checks and turning their outcome into reports.

Checks raise or leave witnesses; only this module converts exceptions into
report statuses.
"""
# Built-in Imports
import logging
import pathlib
from typing import Any, Dict, List, Optional, Sequence, Tuple

# Third-party Imports
from tqdm import tqdm

# Internal Imports
from .. import _logger, config
from ..data_protocols import Witness
from ..exceptions import (
    DegenerateParametersError,
    InvalidCheckSpecError,
    NSRError,
    ResourceCapError,
)
from ..service import ServiceGroup
from ..states import CheckReport, CheckSpec
from ..utils import output_location
from .context import CheckContext
from .profiler_service import ProfilerService
from .record_service import RecordService
from .registry import CheckEntry, CheckKind, all_entries
from .sampling import parse_fixed
from .session import open_session

logger: logging.Logger = _logger.getLogger("nsr-verify")

SUITES = ("proven", "conjecture", "all")

EXIT_OK = 0
EXIT_PROVEN_FAILED = 1
EXIT_CONJECTURE_FAILED = 3

# Sampling accidents, resolved by drawing new parameters
DEGENERATE = (DegenerateParametersError, ZeroDivisionError)


########################################################################
## Validation
########################################################################


def validate(spec: CheckSpec) -> CheckEntry:
    entries = all_entries()
    if spec.name not in entries:
        raise InvalidCheckSpecError(f"unknown check {spec.name!r}")
    entry = entries[spec.name]
    if spec.n < entry.min_n:
        raise InvalidCheckSpecError(f"{spec.name} needs N >= {entry.min_n}, got {spec.n}")
    if spec.trials < 1:
        raise InvalidCheckSpecError(f"trials must be at least 1, got {spec.trials}")
    for label, value in (("order", spec.order), ("sigma-order", spec.sigma_order)):
        if value is not None and value < 0:
            raise InvalidCheckSpecError(f"negative {label} {value}")
    try:
        parse_fixed(spec.params)
    except ValueError as e:
        raise InvalidCheckSpecError(f"{spec.name}: {e}") from e
    return entry


def resolve_orders(entry: CheckEntry, spec: CheckSpec) -> Tuple[int, int]:
    """Requested orders, or the check's defaults capped by the global maximum."""
    cap = config.max_order()
    order = min(entry.default_order(spec.n), cap) if spec.order is None else spec.order
    sigma_order = entry.sigma_order if spec.sigma_order is None else spec.sigma_order
    return order, sigma_order


########################################################################
## Single check
########################################################################


def _attempt(
    entry: CheckEntry, spec: CheckSpec, orders: Tuple[int, int], attempt: int, log: logging.Logger
) -> CheckContext:
    order, sigma_order = orders
    if max(order, sigma_order) > config.max_order():
        raise ResourceCapError(f"order {max(order, sigma_order)} exceeds the cap {config.max_order()}")
    ctx = CheckContext(spec, order, sigma_order, attempt, batch=entry.batch, logger=log)
    entry.fn(ctx)
    return ctx


def _error_witness(e: Exception) -> Witness:
    key = getattr(e, "key", None)
    return Witness.of(key if key is not None else "-", type(e).__name__, str(e))


def _report_params(
    spec: CheckSpec, orders: Tuple[int, int], ctx: Optional[CheckContext]
) -> Dict[str, Any]:
    params: Dict[str, Any] = {
        "n": spec.n,
        "order": orders[0],
        "sigma_order": orders[1],
        "seed": spec.seed,
        "trials": spec.trials,
        "source": "explicit" if spec.explicit else "sample",
    }
    if spec.explicit:
        params["given"] = dict(spec.params)
    if ctx is not None:
        if ctx.points:
            params["point"] = ctx.points[0].as_record()
        if ctx.extra:
            params["observed"] = ctx.extra
    return params


def run_check(spec: CheckSpec) -> CheckReport:
    """Run one check, resampling degenerate parameter draws.

    Explicit parameters are never resampled: a degenerate explicit point is
    reported as ``degenerate-skipped`` right away.
    """
    entry = validate(spec)
    orders = resolve_orders(entry, spec)
    log = _logger.fork(logger, spec.name, identifier=f"{spec.name}:N={spec.n}")
    retries = int(config.get("sampling.retries"))

    profiler = ProfilerService(logger=log)
    profiler.start()

    ctx: Optional[CheckContext] = None
    errors: List[Witness] = []
    message = ""
    attempt = 0
    while True:
        try:
            ctx = _attempt(entry, spec, orders, attempt, log)
            break
        except DEGENERATE as e:
            message = f"{type(e).__name__}: {e}"
            if spec.explicit or attempt >= retries:
                break
            log.warning(f"{spec.name}: degenerate draw on attempt {attempt} ({e}), resampling")
            attempt += 1
        except (NSRError, ValueError) as e:
            message = f"{type(e).__name__}: {e}"
            errors.append(_error_witness(e))
            break

    diagnostics = profiler.stop(retries=attempt)
    report = CheckReport(
        name=spec.name,
        kind=entry.kind.value,
        params=_report_params(spec, orders, ctx),
        ms=diagnostics.wall_ms,
        diagnostics=diagnostics,
    )

    if errors:
        report.status = "fail"
        report.witnesses = errors
        report.message = message
    elif ctx is None:
        report.status = "degenerate-skipped"
        report.message = message
    else:
        report.witnesses = list(ctx.witnesses)
        if ctx.witnesses:
            report.status = "fail"
        elif ctx.approximate:
            report.status = "approx-pass"
        if ctx.residual is not None:
            report.residual = ctx.residual
            report.tolerance = ctx.tolerance

    logger.info(
        f"{spec.name} N={spec.n} D={orders[0]}: {report.status} ({report.ms:.1f} ms)"
    )
    return report


########################################################################
## Suites
########################################################################


def build_suite(suite: str = "all", seed: int = 0, trials: int = 1) -> List[CheckSpec]:
    """Every registered check of ``suite`` at each of its default N."""
    if suite not in SUITES:
        raise InvalidCheckSpecError(f"unknown suite {suite!r}, expected one of {SUITES}")
    specs = []
    for name, entry in all_entries().items():
        if suite != "all" and entry.kind.value != suite:
            continue
        for n in entry.suite_ns:
            specs.append(CheckSpec(name=name, n=n, seed=seed, trials=trials))
    return specs


def run_suite(
    specs: Sequence[CheckSpec], jobs: Optional[int] = None, progress: bool = False
) -> List[CheckReport]:
    """Run ``specs`` on ``jobs`` workers; reports keep the order of ``specs``."""
    for spec in specs:
        validate(spec)
    if not specs:
        return []

    jobs = int(jobs or config.get("verify.jobs"))
    session = open_session(min(jobs, len(specs)))
    reports: List[CheckReport] = []
    try:
        for spec in specs:
            session.add(run_check, spec)
        with tqdm(total=len(specs), desc="checks", disable=not progress) as pbar:
            for future in session.futures:
                reports.append(future.result())
                pbar.update(1)
    finally:
        session.shutdown()
    return reports


########################################################################
## Output
########################################################################


def exit_code(reports: Sequence[CheckReport]) -> int:
    failed = {r.kind for r in reports if r.failed}
    if CheckKind.PROVEN.value in failed:
        return EXIT_PROVEN_FAILED
    if CheckKind.CONJECTURE.value in failed:
        return EXIT_CONJECTURE_FAILED
    return EXIT_OK


def emit_report(
    reports: Sequence[CheckReport], out: pathlib.Path, csv: Optional[bool] = None
) -> int:
    """Write the JSON report (and CSV summary) and return the exit code."""
    dir, stem = output_location(out)
    csv = bool(config.get("report.csv")) if csv is None else csv
    record = RecordService(dir, stem, csv=csv, logger=logger)
    for report in reports:
        record.submit(report)
    ServiceGroup({"record": record}).apply("shutdown")
    return exit_code(reports)
