import pathlib
from dataclasses import dataclass, field
from typing import Any, Dict, List, Literal, Optional

from dataclasses_json import DataClassJsonMixin, cfg

from .data_protocols import CheckDiagnostics, Witness

# As https://github.com/lidatong/dataclasses-json/issues/202#issuecomment-1186373078
cfg.global_config.encoders[pathlib.Path] = str
cfg.global_config.decoders[pathlib.Path] = pathlib.Path

Status = Literal["pass", "fail", "degenerate-skipped", "approx-pass"]


@dataclass
class CheckSpec(DataClassJsonMixin):
    """One requested verification.

    An empty ``params`` means every parameter is sampled from ``seed``; any
    entry given there is used as is and disables resampling.
    """

    name: str
    n: int = 2
    order: Optional[int] = None
    sigma_order: Optional[int] = None
    seed: int = 0
    trials: int = 1
    params: Dict[str, str] = field(default_factory=dict)

    @property
    def explicit(self) -> bool:
        return bool(self.params)


@dataclass
class CheckReport(DataClassJsonMixin):
    name: str
    kind: str = "proven"
    params: Dict[str, Any] = field(default_factory=dict)
    status: Status = "pass"
    witnesses: List[Witness] = field(default_factory=list)
    ms: float = 0

    # Approximate checks only
    tolerance: Optional[float] = None
    residual: Optional[float] = None

    message: str = ""

    # Profiler
    diagnostics: CheckDiagnostics = field(default_factory=CheckDiagnostics)

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def as_entry(self) -> Dict[str, Any]:
        """The report-document form; only ``ms`` depends on timing."""
        entry: Dict[str, Any] = {
            "name": self.name,
            "kind": self.kind,
            "params": self.params,
            "status": self.status,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "ms": round(self.ms, 3),
        }
        if self.residual is not None:
            entry["residual"] = self.residual
            entry["tolerance"] = self.tolerance
        if self.message:
            entry["message"] = self.message
        return entry

    def as_row(self) -> Dict[str, Any]:
        row: Dict[str, Any] = {
            "name": self.name,
            "kind": self.kind,
            "n": self.params.get("n"),
            "order": self.params.get("order"),
            "seed": self.params.get("seed"),
            "status": self.status,
            "witnesses(int)": len(self.witnesses),
            "residual": self.residual,
        }
        row.update(self.diagnostics.as_row())
        return row
