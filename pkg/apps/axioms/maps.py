"""Single-criterion evaluation maps used to separate the axioms from each other."""
from fractions import Fraction

from apps.games.matrices import ScalarGame


def _scalar(game):
    return game if isinstance(game, ScalarGame) else ScalarGame(game)


def h0(game):
    """Constant zero."""
    return Fraction(0)


def h1(game):
    """The top-left entry b_11."""
    return _scalar(game).entry(0, 0)


def h2(game):
    """Smallest entry of the first column."""
    return min(_scalar(game).column(0))


EVALUATION_MAPS = {
    'h0': h0,
    'h1': h1,
    'h2': h2,
}
