"""Exception roots shared by every package.

Concrete errors live next to the code that raises them; the CLI only needs
these roots to pick an exit code.
"""

from __future__ import annotations

from typing import Optional


class UltranormError(Exception):
    """Base class for every error raised by the library."""


class PreconditionError(UltranormError):
    """An operation was called outside its precondition."""


class InvariantViolation(UltranormError):
    """An internal self-check disagreed with itself."""


class DescriptorError(UltranormError):
    """Malformed textual input (descriptor files, literals, grammars)."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        self.message = message
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")

    def at_line(self, line: int) -> "DescriptorError":
        """Return a copy of this error pinned to `line` (keeps the subclass)."""
        err = type(self).__new__(type(self))
        DescriptorError.__init__(err, self.message, line)
        return err
