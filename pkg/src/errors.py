from typing import Optional


class GraphToolError(Exception):
    """Base class for every error raised by this package"""


class GraphParseError(GraphToolError, ValueError):
    """Malformed graph6, edge-list or transit-function text"""

    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        location = ""
        if offset is not None:
            location = f" at byte offset {offset}"
        elif line is not None:
            location = f" on line {line}"
        super().__init__(f"{message}{location}")


class CapacityError(GraphToolError):
    """Input exceeds a supported size (64 vertices, enumeration ranges)"""


class DomainError(GraphToolError):
    """Operation undefined for this input, e.g. distances in a disconnected graph"""


class ArgumentError(GraphToolError, ValueError):
    """Invalid argument such as a wheel with fewer than four rim vertices"""


class AmalgamError(GraphToolError):
    """An AmalgamSpec invariant does not hold"""

    def __init__(self, invariant: str, message: str):
        self.invariant = invariant
        super().__init__(f"{invariant}: {message}")


class UnknownFixtureError(GraphToolError, KeyError):
    def __str__(self) -> str:
        return f"unknown fixture: {self.args[0]}"


class UnknownTheoremError(GraphToolError, KeyError):
    def __str__(self) -> str:
        return f"unknown theorem id: {self.args[0]}"


class ConfigError(GraphToolError):
    """Invalid configuration value"""


class InternalConsistencyError(GraphToolError, AssertionError):
    """A result contradicts a guaranteed property, e.g. two distinct gates"""
