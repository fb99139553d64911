# Internal Imports
import logging
import pathlib
from typing import Dict, List, Optional

from .. import _logger
from ..records import JSONRecord, Record, TabularRecord
from ..service import Service
from ..states import CheckReport


class RecordService(Service):
    """Routes finished check reports to the JSON report and the CSV summary."""

    def __init__(
        self,
        dir: pathlib.Path,
        name: str,
        csv: bool = True,
        logger: Optional[logging.Logger] = None,
    ):
        super().__init__("record")

        # To keep record of entries
        self.records: Dict[str, Record] = {"json": JSONRecord(dir, name)}
        if csv:
            self.records["tabular"] = TabularRecord(dir, name)

        # Logging
        if logger:
            self.logger = logger
        else:
            self.logger = _logger.getLogger("nsr-verify")

    @property
    def paths(self) -> List[pathlib.Path]:
        json_record = self.records["json"]
        paths = [json_record.json_path] if isinstance(json_record, JSONRecord) else []
        tabular = self.records.get("tabular")
        if isinstance(tabular, TabularRecord):
            paths.append(tabular.tabular_file_path)
        return paths

    def submit(self, report: CheckReport):
        self.records["json"].write({"data": report.as_entry()})
        if "tabular" in self.records:
            self.records["tabular"].write({"data": report.as_row()})

    def shutdown(self):
        for record in self.records.values():
            record.close()
        self.logger.debug(f"{self}: wrote {[str(p) for p in self.paths]}")
