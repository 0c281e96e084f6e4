"""Pinned games used by the independence table, the sample files and the tests."""
from fractions import Fraction

from .matrices import MultiGameD1, MultiGameD2, ScalarGame

HALF = Fraction(1, 2)


def duopoly():
    """
    Two firms, second-class: market share (2 x 2) and profit (2 x 3).

    Player I is firm 1 choosing rows; firm 2 answers each criterion with
    its own column strategy.
    """
    return MultiGameD2([
        [[0, -1], [1, 0]],
        [[-2, 0, HALF], [-1, 0, 1]],
    ])


def crossed_units_d1():
    """A(1) = (1, 0), A(2) = (0, 1) with a shared column strategy."""
    return MultiGameD1([[[1, 0]], [[0, 1]]])


def crossed_units_d2():
    """The same two rows with per-criterion column strategies."""
    return MultiGameD2([[[1, 0]], [[0, 1]]])


def independence_matrix():
    return ScalarGame([[3, 5], [2, 7]])
