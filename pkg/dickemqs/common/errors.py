"""
Copyright (c) dickemqs contributors.

This source code is licensed under the MIT license found in the
LICENSE file in the root directory of this source tree.
"""

"""
Exceptions raised by dickemqs. Every error knows the exit code the CLI
returns for it and carries a ``context`` dict (e.g. the coupling ``g`` of a
failing sweep point) that is appended to the message.
"""


class DickeError(Exception):
    exit_code = 1

    def __init__(self, message, **context):
        super().__init__(message)
        self.message = message
        self.context = dict(context)

    def add_context(self, **context):
        self.context.update(context)
        return self

    def __str__(self):
        if not self.context:
            return self.message
        details = ", ".join(f"{k}={v}" for k, v in self.context.items())
        return f"{self.message} ({details})"


class ValidationError(DickeError, ValueError):
    """Invalid input value. ``field`` names the offending parameter."""

    exit_code = 2

    def __init__(self, message, field=None, **context):
        super().__init__(message, **context)
        self.field = field


class CutoffTooSmallError(ValidationError):
    pass


class SpecificationError(ValidationError):
    pass


class ConvergenceError(DickeError):
    """Raised when an iterative procedure gives up. ``trace`` holds the
    sequence of (cutoff, energy) pairs or iterates that were visited.
    """

    exit_code = 3

    def __init__(self, message, trace=(), **context):
        super().__init__(message, **context)
        self.trace = tuple(trace)


class MinimizationError(ConvergenceError):
    def __init__(self, message, best=None, trace=(), **context):
        super().__init__(message, trace=trace, **context)
        self.best = best


class OutputError(DickeError, OSError):
    exit_code = 4

    def __init__(self, message, path=None, **context):
        if path is not None:
            context["path"] = str(path)
        super().__init__(message, **context)
        self.path = path


class ResourceError(DickeError):
    exit_code = 5
