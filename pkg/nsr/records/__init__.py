# Class Imports
from .json_record import JSONRecord
from .record import Record
from .tabular_record import TabularRecord

__all__ = [
    "Record",
    "TabularRecord",
    "JSONRecord",
]
