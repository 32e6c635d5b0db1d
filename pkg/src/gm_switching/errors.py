from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class GMError(Exception):
    message: str

    def __str__(self) -> str:
        return self.message

    def __reduce__(self) -> tuple[type[GMError], tuple[str]]:
        # frozen fields; rebuild through __init__ when unpickled in another process
        return (type(self), (self.message,))


class GraphError(GMError):
    """Bad vertex counts, loops, out-of-range endpoints or permutations."""


class Graph6Error(GMError):
    """Malformed graph6 input."""


class SwitchingError(GMError):
    """A cell system or switching set that is malformed or fails validation."""


class ConstructionError(GMError):
    """A fixture or matrix construction whose preconditions do not hold."""


class ConfigError(GMError):
    """Unparseable configuration value."""
