# Utils Imports
from . import _logger, config, utils
from ._debug import debug
from .exceptions import NSRError
from .partition import DominantWeight, Partition, PartitionTuple
from .qseries import CoordSystem, TruncSeries
from .scalar import RatFunc
from .specialfn import FunctionTag, ParamPoint, build_function
from .states import CheckReport, CheckSpec
from .version import __version__

# Logger setup
_logger.setup()

__all__ = [
    "CheckReport",
    "CheckSpec",
    "CoordSystem",
    "DominantWeight",
    "FunctionTag",
    "NSRError",
    "ParamPoint",
    "Partition",
    "PartitionTuple",
    "RatFunc",
    "TruncSeries",
    "build_function",
    "config",
    "debug",
    "utils",
    "__version__",
]
