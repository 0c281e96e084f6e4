"""
Dominance by convex combinations, decided by exact LP feasibility.

A column is dominated when some mixture of the existing columns is at least
as large in every row (player II maximizes). A row-tuple is dominated when one
mixture of the existing rows, used in every criterion at once, reproduces it
(exact=True) or lies below it everywhere (exact=False; player I minimizes).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from apps.games.exceptions import DimensionError
from apps.games.matrices import MultiGameD1, MultiGameD2, ScalarGame
from apps.games.rationals import as_vector
from apps.games.strategies import MixedStrategy
from apps.solvers.lp import Constraint, LinearProgram, Relation, solve_lp

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Dominance:
    """No when weights is None; Yes(weights) otherwise."""

    weights: MixedStrategy = None

    @property
    def dominated(self):
        return self.weights is not None

    def __bool__(self):
        return self.dominated


def _mixture_program(vectors, rows):
    """Feasibility of sum_i lambda_i vectors[i] (relation) target, lambda in the simplex."""
    size = len(vectors)
    constraints = [
        Constraint(tuple(v[position] for v in vectors), relation, rhs)
        for position, relation, rhs in rows
    ]
    constraints.append(Constraint((ONE,) * size, Relation.EQ, ONE))
    return LinearProgram(objective=(ZERO,) * size, constraints=tuple(constraints))


def _solve(program):
    solution = solve_lp(program)
    if not solution.is_optimal:
        return Dominance()
    return Dominance(MixedStrategy(solution.values))


def is_dominated_column(game, column) -> Dominance:
    """Some mixture of the columns is >= column in every row."""
    game = game if isinstance(game, ScalarGame) else ScalarGame(game)
    column = as_vector(column)
    if len(column) != game.m:
        raise DimensionError(f'column of length {len(column)} for a game with {game.m} rows')
    vectors = [game.column(j) for j in range(game.n)]
    rows = [(i, Relation.GE, column[i]) for i in range(game.m)]
    return _solve(_mixture_program(vectors, rows))


def is_dominated_column_tuple(game: MultiGameD1, columns) -> Dominance:
    """One mixture dominating the new column of every criterion (first-class games)."""
    if len(columns) != game.k:
        raise DimensionError(f'need one column per criterion ({game.k}), got {len(columns)}')
    stacked = ScalarGame(np.vstack([a.entries for a in game.matrices]))
    return is_dominated_column(stacked, [v for column in columns for v in as_vector(column)])


def is_dominated_row(game, row_tuple, exact=True) -> Dominance:
    """
    One mixture of rows, applied in all criteria, equal to (exact) or below
    (not exact) the candidate row of each criterion.
    """
    if isinstance(game, ScalarGame):
        game = MultiGameD2([game])
        if row_tuple and not isinstance(row_tuple[0], (list, tuple, np.ndarray)):
            row_tuple = (row_tuple,)
    if not isinstance(game, (MultiGameD1, MultiGameD2)):
        raise DimensionError(f'expected a game, got {type(game).__name__}')
    if len(row_tuple) != game.k:
        raise DimensionError(f'need one row per criterion ({game.k}), got {len(row_tuple)}')
    candidate = []
    for index, (a, row) in enumerate(zip(game.matrices, row_tuple), start=1):
        row = as_vector(row)
        if len(row) != a.n:
            raise DimensionError(f'row for criterion {index} has {len(row)} entries, expected {a.n}')
        candidate.extend(row)
    # one long row per original row: criterion blocks side by side
    vectors = [
        [v for a in game.matrices for v in a.entries[i, :]]
        for i in range(game.m)
    ]
    relation = Relation.EQ if exact else Relation.LE
    rows = [(p, relation, candidate[p]) for p in range(len(candidate))]
    return _solve(_mixture_program(vectors, rows))
