from __future__ import annotations

import copy
from typing import Any, Callable, Sequence, Type

from miscutils import ReprMixin, issubclass_safe

from .argument import Argument
from .enums import RunMode
from .handler import CommandHandler


class DeclarativeMeta(type):
    _initialized_ = False

    def __init__(cls, name: str, bases: tuple, namespace: dict) -> None:
        cls._arguments_: dict[str, Argument] = {}

        if cls._initialized_:
            for name, val in namespace.items():
                if isinstance(val, Argument):
                    type(cls)._handle_argument_(cls, name=name, argument=val)
                elif issubclass_safe(val, Command):
                    type(cls)._handle_command_(cls, name=name, command=val)

    def _handle_argument_(cls, name: str, argument: Argument) -> None:
        if argument.name:
            raise RuntimeError(f"Cannot provide an argument name explicitly when defining a {Command.__name__} declaratively: ({argument.name}).")

        argument.name = name
        cls._arguments_[name] = argument

    def _handle_command_(cls, name: str, command: Type[Command]) -> None:
        raise NotImplementedError


class CommandMeta(DeclarativeMeta):
    def __init__(cls, name: str, bases: tuple, namespace: dict) -> None:
        cls._subcommands_: dict[str, Type[Command]] = {}
        super().__init__(name, bases, namespace)

    def _handle_command_(cls, name: str, command: Type[Command]) -> None:
        cls._subcommands_[name] = command


class Command(ReprMixin, metaclass=CommandMeta):
    """
    Declare a command by subclassing: class attributes holding Argument instances become its arguments, and nested Command subclasses
    become its subcommands. The command's name is its lowercased class name, its help text the class docstring, and '_callback_' runs
    once the arguments are set. Subcommands with '_hidden_ = True' are accepted but left out of the help listing.
    """
    _hidden_ = False

    def __init__(self, name: str = None, desc: str = None, callback: Callable = None, run_mode: RunMode = RunMode.COMMANDLINE) -> None:
        self._handler_ = CommandHandler(name=name or type(self).__name__.lower(), desc=desc or self.__doc__, callback=callback or self._callback_,
                                        run_mode=run_mode, hidden=type(self)._hidden_, command=self)

        for name, argument in type(self)._arguments_.items():
            setattr(self, name, argument := copy.copy(argument))
            self._handler_.add_argument(argument)

        for name, command in type(self)._subcommands_.items():
            setattr(self, name, command_instance := command(run_mode=run_mode))
            self._handler_.add_subhandler(command_instance._handler_)

    def __call__(self, argv: Sequence[str] = None, **kwargs: Any) -> Command:
        handler = self._handler_.process(argv, **kwargs)
        return handler.command

    def __getitem__(self, item: Any) -> Any:
        return self._handler_.shared_namespace[item]

    def __setitem__(self, key: Any, value: Any) -> None:
        self._handler_.shared_namespace[key] = value

    def _callback_(self) -> Any:
        pass


DeclarativeMeta._initialized_ = True
