__all__ = [
    "Config", "settings",
    "Validate", "Condition", "Validator",
    "Report",
]

from .config import Config, settings
from .validator import Validate, Condition, Validator
from .report import Report
