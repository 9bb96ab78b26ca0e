from subtypes import Enum


class RunMode(Enum):
    """How a command collects its argument values: parsed from an argv list, or set directly from keyword arguments."""
    COMMANDLINE = PROGRAMMATIC = Enum.Auto()
