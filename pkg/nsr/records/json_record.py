# Built-in Imports
import json
import pathlib
from typing import Any, Dict, List

# Internal Import
from .record import Record

DOCUMENT_VERSION = 1


class JSONRecord(Record):
    def __init__(self, dir: pathlib.Path, name: str, key: str = "checks"):
        """Construct a JSON document Record.

        Entries are kept in write order and dumped on ``close`` as
        ``{"version": 1, key: [...]}`` with sorted keys, so equal entries give
        byte-identical files.

        Args:
            dir (pathlib.Path): The directory of the document.
            name (str): The file stem of the document.
            key (str): The top-level key holding the entries.
        """
        super().__init__()

        # Saving the Record attributes
        self.dir = dir
        self.name = name
        self.key = key
        self.json_path = self.dir / f"{self.name}.json"
        self.entries: List[Dict[str, Any]] = []

    def write(self, data_chunk: Dict[str, Any]):
        self.entries.append(data_chunk["data"])

    def document(self) -> Dict[str, Any]:
        return {"version": DOCUMENT_VERSION, self.key: list(self.entries)}

    def close(self):
        self.dir.mkdir(parents=True, exist_ok=True)
        with self.json_path.open("w") as f:
            json.dump(self.document(), f, indent=2, sort_keys=True)
            f.write("\n")
