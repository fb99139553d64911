# Built-in Imports
from typing import Any, Dict


class Record:
    """Abstract output document that collects entries and is finalized on close."""

    name: str

    def __repr__(self):
        return f"{self.__class__.__name__} <name={self.name}>"

    def __str__(self):
        return self.__repr__()

    def write(self, data_chunk: Dict[str, Any]):
        """Add one entry, found under ``data_chunk["data"]``.

        Raises:
            NotImplementedError: ``Record`` is an abstract class. The
            ``write`` needs to be implemented in concrete classes.

        """
        raise NotImplementedError("``write`` needs to be implemented.")

    def close(self):
        """Flush everything written so far.

        Raises:
            NotImplementedError: ``Record`` is an abstract class. The
            ``close`` needs to be implemented in concrete classes.

        """
        raise NotImplementedError("``close`` needs to be implemented.")
