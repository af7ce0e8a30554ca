"""Error hierarchy shared by the library and the CLI.

The CLI maps these onto exit codes: ParseError -> 1, DomainError -> 2,
UnsupportedError -> 3.
"""


class BehrendError(ValueError):
    """Base class for all errors raised by this package."""


class ParseError(BehrendError):
    """Syntax error in an ideal/tower expression; carries the offset."""

    def __init__(self, message, text=None, position=None):
        super().__init__(message)
        self.text = text
        self.position = position

    def diagnostic(self):
        if self.text is None or self.position is None:
            return str(self)
        caret = " " * self.position + "^"
        return f"{self}\n  {self.text}\n  {caret}"


class DomainError(BehrendError):
    """Input outside an operation's mathematical domain (e.g. not a fat point)."""


class UnsupportedError(BehrendError):
    """Well-formed input that no implemented engine covers."""
