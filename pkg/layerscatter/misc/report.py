from __future__ import annotations

import contextlib
import sys
from typing import Any, Iterator, Sequence, TextIO

from tabulate import tabulate


class Report:
    """A console report made of titled sections, each a table or a block of text, framed by separator lines."""
    SEP_LENGTH = 100

    def __init__(self, title: str) -> None:
        self.title = title
        self.sections: list[tuple[str, str]] = []

    def __repr__(self) -> str:
        return f"{type(self).__name__}(title={repr(self.title)}, sections={[heading for heading, _ in self.sections]})"

    def __str__(self) -> str:
        return self.render()

    def add_table(self, heading: str, rows: Sequence[Sequence[Any]], headers: Sequence[str] = (), floatfmt: str = ".12g") -> Report:
        self.sections.append((heading, tabulate(rows, headers=headers, tablefmt="fancy_grid", floatfmt=floatfmt)))
        return self

    def add_text(self, heading: str, text: str) -> Report:
        self.sections.append((heading, text))
        return self

    def render(self) -> str:
        blocks = [self.separator("="), self.title, self.separator("=")]
        for heading, body in self.sections:
            blocks += ["", heading, self.separator("-"), body]
        return "\n".join(blocks + [self.separator("=")])

    def print(self, stream: TextIO = None) -> None:
        with self.surround_sep(stream=stream or sys.stdout):
            print(self.render(), file=stream or sys.stdout)

    @classmethod
    def separator(cls, character: str = "-") -> str:
        return character*cls.SEP_LENGTH

    @staticmethod
    @contextlib.contextmanager
    def surround_sep(stream: TextIO, prefix: str = "\n", suffix: str = "\n") -> Iterator[None]:
        """Context manager padding whatever is printed inside it with blank lines."""
        print(prefix, end="", file=stream)
        yield
        print(suffix, end="", file=stream)
