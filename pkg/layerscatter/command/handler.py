from __future__ import annotations

import string
from typing import Any, Callable, Optional, Sequence, TYPE_CHECKING

from subtypes import Dict

from layerscatter.errors import ValidationError

from .argument import Argument
from .enums import RunMode
from .hierarchy import Hierarchy

if TYPE_CHECKING:
    from .declarative import Command


class CommandHandler:
    """
    Holds the arguments, subcommands and callback of one command, and dispatches a run either from an argv list or from keyword arguments.
    Commands down one branch of the tree share a namespace, which the root command uses to hand resources to its subcommands.
    """

    def __init__(self, name: str, desc: str = "", callback: Callable = None, run_mode: RunMode = RunMode.COMMANDLINE,
                 hidden: bool = False, parent: CommandHandler = None, command: Command = None) -> None:
        self.name, self.desc, self.callback, self.run_mode, self.hidden = name, desc or "", callback, run_mode, hidden
        self.parent, self.command = parent, command

        self.arguments: list[Argument] = []
        self.subhandlers: list[CommandHandler] = []
        self.names: set[str] = set()

        self.hierarchy: Optional[Hierarchy] = None
        self.shared_namespace = Dict()

        self.remaining_letters = set(string.ascii_lowercase)
        self.remaining_letters.discard("h")

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={repr(self.name)}, arguments={[argument.name for argument in self.arguments]}, subhandlers={[child.name for child in self.subhandlers]})"

    @property
    def summary(self) -> str:
        """The first line of the description."""
        return self.desc.strip().split("\n")[0] if self.desc else ""

    def add_argument(self, argument: Argument) -> None:
        """Add a new Argument object to this CommandHandler, assigning it a free single-letter alias if one is left."""
        self.register_name(argument.name)
        self.arguments.append(argument)

        if not argument.positional and (shortform := self.determine_shortform_alias(argument.name)):
            argument.shortform = shortform

    def add_subhandler(self, subhandler: CommandHandler) -> None:
        self.register_name(subhandler.name)
        self.subhandlers.append(subhandler)
        subhandler.parent = self
        subhandler.share_namespace(self.shared_namespace)

    def share_namespace(self, namespace: Dict) -> None:
        self.shared_namespace = namespace
        for child in self.subhandlers:
            child.share_namespace(namespace)

    def register_name(self, name: str) -> None:
        if not name.isidentifier():
            raise ValueError(f"Name '{name}' is not a valid Python identifier.")

        if name in self.names:
            raise ValueError(f"Name '{name}' is already attached to this {type(self).__name__}.")

        self.names.add(name)

    def process(self, argv: Sequence[str] = None, **kwargs: Any) -> CommandHandler:
        """Collect argument values (from argv, or from kwargs when running programmatically), then run every callback from the root down to the chosen command."""
        if self.run_mode == RunMode.COMMANDLINE and kwargs:
            raise ValidationError(f"Command '{self.name}' parses its arguments from the command line and takes no keyword arguments.")

        self.hierarchy = Hierarchy(root_handler=self)
        return self.hierarchy.choose_strategy(argv=argv, namespace=kwargs)

    def determine_shortform_alias(self, name: str) -> Optional[str]:
        for char in name:
            if char.isalnum():
                letter = char.lower()
                if letter in self.remaining_letters:
                    self.remaining_letters.remove(letter)
                    return letter
        return None
