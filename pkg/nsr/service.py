from collections import UserDict
from typing import Any, Dict, List, Optional


class Service:
    """Something a check run owns and must shut down: a profiler or a record sink."""

    def __init__(self, name: str):
        self.name = name

    def __str__(self):
        return f"<{self.__class__.__name__}, name={self.name}>"

    def shutdown(self):
        ...


class ServiceGroup(UserDict):
    """Services by name, driven together through ``apply``."""

    data: Dict[str, Service]

    def apply(self, method_name: str, order: Optional[List[str]] = None) -> List[Any]:
        """Call ``method_name`` on every service, or only on ``order`` in that order."""
        names = order if order else list(self.data)
        return [getattr(self.data[name], method_name)() for name in names if name in self.data]
