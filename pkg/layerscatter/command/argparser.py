from __future__ import annotations

import argparse
from typing import Any, Callable, NoReturn, TYPE_CHECKING

import tabulate

from layerscatter.errors import ValidationError

from .argument import BooleanArgument

if TYPE_CHECKING:
    from .handler import CommandHandler
    from .argument import Argument


class ArgParser(argparse.ArgumentParser):
    """
    Subclass of argparse.ArgumentParser with its own helptext formatting. Parse failures raise ValidationError
    instead of exiting, so the caller decides the exit code.
    """

    def __init__(self, *args: Any, handler: CommandHandler = None, **kwargs: Any) -> None:
        self.handler = handler
        super().__init__(*args, **kwargs)

    def add_arguments_from_handler(self) -> None:
        for arg in self.handler.arguments:
            options: dict[str, Any] = dict(default=arg.default, type=self.validate_and_set(arg), help=arg.info)

            if isinstance(arg, BooleanArgument):
                options.update(nargs="?", const="true")
            elif arg.nullable:
                options.update(nargs="?")

            if arg.positional:
                self.add_argument(arg.name, **options)
            else:
                self.add_argument(*arg.aliases, required=arg.required, dest=arg.name, **options)

    def error(self, message: str) -> NoReturn:
        raise ValidationError(f"{self.prog}: {message}")

    def format_help(self) -> str:
        target_cols = ["name", "commandline_aliases", "type", "default", "info", "choices", "conditions"]

        required_args, optional_args = [], []

        for arg in self.handler.arguments:
            record = (
                arg.name,
                arg.name if arg.positional else ", ".join(arg.aliases),
                arg.validator.type_affinity.__name__,
                arg.default,
                arg.info,
                arg.choices,
                ", ".join(str(cond) for cond in arg.validator.conditions)
            )

            (required_args if arg.required else optional_args).append(record)

        required = f"Required Arguments\n{tabulate.tabulate(required_args, headers=target_cols, tablefmt='fancy_grid')}"
        optional = f"Optional Arguments\n{tabulate.tabulate(optional_args, headers=target_cols, tablefmt='fancy_grid')}"

        commands = ""
        if visible := [child for child in self.handler.subhandlers if not child.hidden]:
            commands = f"Commands\n{tabulate.tabulate([(child.name, child.summary) for child in visible], headers=['command', 'info'], tablefmt='fancy_grid')}\n\n"

        return f"\n{self.format_usage()}\n{self.description or ''}\n\n{commands}{required}\n\n{optional}\n\n{self.epilog or ''}"

    def _get_formatter(self) -> Any:
        return self.formatter_class(prog=self.prog, max_help_position=2000, width=2000)

    @staticmethod
    def validate_and_set(argument: Argument) -> Callable[[Any], Any]:
        def wrapper(candidate: Any) -> Any:
            try:
                argument.value = candidate
            except ValidationError as ex:
                raise argparse.ArgumentTypeError(f"invalid value {repr(candidate)} for '{argument.name}': {ex}")
            return argument.value

        wrapper.__name__ = argument.validator.type_affinity.__name__
        return wrapper
