__all__ = [
    "Log",
    "IndentationLog",
    "Tracer", "logged",
]

from .base import Log
from .nested import IndentationLog
from .trace import Tracer, logged
