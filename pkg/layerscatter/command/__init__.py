__all__ = [
    "RunMode", "ArgType", "Argument", "Command", "ArgParser",
]

from .enums import RunMode
from .argument import ArgType, Argument
from .declarative import Command
from .argparser import ArgParser
