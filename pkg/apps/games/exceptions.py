"""
Exception hierarchy shared by the game, solver and axiom apps.

The solve command maps each family to an exit code (see
apps.games.management.commands.solve).
"""


class GameError(Exception):
    """Base class for every error raised by the multicriteria game toolkit"""


class DimensionError(GameError, ValueError):
    """Shapes of matrices, strategies or instances do not fit together"""


class WeightError(GameError, ValueError):
    """Weight vector outside the open simplex, or an unusable weight grid"""


class StrategyError(GameError, ValueError):
    """Vector is not a probability vector"""


class SizeError(GameError):
    """A product-size construction exceeds the configured size cap"""

    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f'construction needs {size} columns/criteria, above the size cap {cap}')


class ParseError(GameError):
    """Game file cannot be read; carries the offending field path or line"""

    def __init__(self, message, field=None, line=None):
        self.field = field
        self.line = line
        location = []
        if line is not None:
            location.append(f'line {line}')
        if field:
            location.append(field)
        prefix = f'{", ".join(location)}: ' if location else ''
        super().__init__(f'{prefix}{message}')


class SolverError(GameError):
    """An identity the solvers guarantee did not hold (strong duality, weighted sums...)"""
