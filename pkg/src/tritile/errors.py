"""Exception hierarchy shared by every tritile module."""


class TritileError(Exception):
    """Base class for all library errors."""


class InvalidSpec(TritileError):
    pass


class TilingError(TritileError):
    """A placed tile list does not form a valid tiling."""


class OverlapError(TilingError):
    pass


class CoverageError(TilingError):
    pass


class DanglingEdgeError(TilingError):
    pass


class SnapAmbiguity(TilingError):
    pass


class OrientationError(TilingError):
    pass


class NonSimpleBoundary(TilingError):
    pass


class ParseError(TritileError):
    """Raised by the JSON loader; ``field`` names the offending path."""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class ClassificationError(TritileError):
    pass


class InconsistentRelations(TritileError):
    pass


class FrameError(TritileError):
    pass


class NotAKiteOrParallelogram(TritileError):
    pass


class BoundaryNotAllC(TritileError):
    pass


class ResourceLimit(TritileError):
    """The search exhausted its node budget before completing."""

    def __init__(self, message, nodes=0):
        super().__init__(message)
        self.nodes = nodes
