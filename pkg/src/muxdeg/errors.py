"""Exception hierarchy shared by every muxdeg module."""


class MuxdegError(Exception):
    """Base class for all library errors."""


class DuplicateLayer(MuxdegError, ValueError):
    pass


class SelfLoopForbidden(MuxdegError, ValueError):
    pass


class InvalidWeight(MuxdegError, ValueError):
    pass


class NotFound(MuxdegError, KeyError):
    def __str__(self):
        # KeyError would repr() the message
        return str(self.args[0]) if self.args else ""


class DimensionMismatch(MuxdegError, ValueError):
    pass


class InvalidArgument(MuxdegError, ValueError):
    pass


class EmptyInput(MuxdegError, ValueError):
    pass


class IoFailure(MuxdegError, OSError):
    def __init__(self, path, reason=""):
        self.path = str(path)
        self.reason = reason
        super().__init__(f"{self.path}: {reason}" if reason else self.path)


class SchemaMismatch(MuxdegError, ValueError):
    def __init__(self, path, column):
        self.path = str(path)
        self.column = column
        super().__init__(f"{self.path}: missing column {column!r}")


class ParseFailure(MuxdegError, ValueError):
    """A data row could not be turned into a valid record.

    ``row`` is the 1-based line number in the file (header is line 1).
    """

    def __init__(self, path, row, reason):
        self.path = str(path)
        self.row = row
        self.reason = reason
        super().__init__(f"{self.path}, line {row}: {reason}")
