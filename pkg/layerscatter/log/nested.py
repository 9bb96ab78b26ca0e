from __future__ import annotations

from contextlib import contextmanager
from typing import Callable, Iterator

from logbook import LogRecord

from pathmagic import PathLike

from .base import Log


class IndentationLog(Log):
    """A Log that indents every message line by the current nesting depth. Stages of a run enter 'indentation()' to nest their output."""

    def __init__(self, filename: PathLike, mode: str = "a", encoding: str = None, level: int = Log.LogLevel.NOT_SET,
                 delay: bool = True, filter: Callable = None, bubble: bool = True, indentation_token: str = "    ") -> None:
        super().__init__(filename=filename, mode=mode, encoding=encoding, level=level, delay=delay, filter=filter, bubble=bubble)
        self.indentation_token = indentation_token
        self.indentation_level = 0
        self.indent = True

    def format_message_line(self, record: LogRecord, line: str) -> str:
        return f"{self.indentation_token*self.indentation_level if self.indent else ''}{super().format_message_line(record=record, line=line)}"

    def greeting(self) -> None:
        with self.no_indentation():
            super().greeting()

    def goodbye(self) -> None:
        with self.no_indentation():
            super().goodbye()

    def handle_exception(self, exception: Exception) -> None:
        with self.no_indentation():
            super().handle_exception(exception)

    @contextmanager
    def indentation(self) -> Iterator[IndentationLog]:
        self.indentation_level += 1
        try:
            yield self
        finally:
            self.indentation_level -= 1

    @contextmanager
    def no_indentation(self) -> Iterator[IndentationLog]:
        indent = self.indent
        self.indent = False
        try:
            yield self
        finally:
            self.indent = indent
