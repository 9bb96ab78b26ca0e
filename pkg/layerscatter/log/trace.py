from __future__ import annotations

import reprlib
from contextlib import nullcontext
from typing import Any, Callable, Optional

from wrapt import decorator

from miscutils import Timer

from .base import Log
from .nested import IndentationLog


class Tracer:
    """Holds the IndentationLog (if any) that nests the output of calls wrapped with 'logged'."""
    log: Optional[IndentationLog] = None
    summarizer = reprlib.Repr()
    summarizer.maxstring = summarizer.maxother = 80

    @classmethod
    def summarize(cls, value: Any) -> str:
        return cls.summarizer.repr(value)


@decorator
def logged(func: Callable, instance: Any, args: Any, kwargs: Any) -> Any:
    """Log a call with its arguments, then its duration and a short summary of its return value, at DEBUG level."""
    positional = ', '.join(([] if instance is None else ["self"]) + [Tracer.summarize(arg) for arg in args])
    keyword = ', '.join([f'{name}={Tracer.summarize(val)}' for name, val in kwargs.items()])
    arguments = f"{positional}{', ' if positional and keyword else ''}{keyword}"

    func_name = func.__name__ if instance is None else f"{type(instance).__name__}.{func.__name__}"

    Log.debug(f"{func_name}({arguments})")

    with (Tracer.log.indentation() if Tracer.log is not None else nullcontext()), Timer() as timer:
        ret = func(*args, **kwargs)

    Log.debug(f"{func_name} [{timer.period:.3f}s] -> {Tracer.summarize(ret)}")

    return ret
