from .common import HandlerFactory, IdentifierFilter
from .utils import get_unique_child_name

__all__ = ["HandlerFactory", "IdentifierFilter", "get_unique_child_name"]
