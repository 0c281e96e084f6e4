"""
Payoff matrices for scalar games and for the two multicriteria classes.

Player I picks rows and minimizes, player II picks columns and maximizes.
MultiGameD1 shares one column strategy of player II across all criteria,
MultiGameD2 lets player II answer each criterion separately; the two are
distinct types and conversions live in apps.games.transforms.
"""
from fractions import Fraction

import numpy as np

from .exceptions import DimensionError
from .rationals import as_matrix, as_vector, render, to_rational


class ScalarGame:
    """An m x n matrix of exact payoffs."""

    __slots__ = ('_entries',)

    game_class = 'scalar'

    def __init__(self, entries):
        self._entries = as_matrix(entries)

    @property
    def entries(self):
        return self._entries

    @property
    def m(self):
        return self._entries.shape[0]

    @property
    def n(self):
        return self._entries.shape[1]

    @property
    def shape(self):
        return self._entries.shape

    @property
    def k(self):
        return 1

    @property
    def matrices(self):
        return (self,)

    def rows(self):
        return [list(row) for row in self._entries]

    def entry(self, i, j):
        return self._entries[i, j]

    def row(self, i):
        return tuple(self._entries[i, :])

    def column(self, j):
        return tuple(self._entries[:, j])

    def scaled(self, weight):
        return ScalarGame(self._entries * to_rational(weight))

    def shifted(self, constant):
        return ScalarGame(self._entries + to_rational(constant))

    def transposed(self):
        return ScalarGame(self._entries.T)

    def negated(self):
        return ScalarGame(-self._entries)

    def with_column(self, column):
        column = as_vector(column)
        if len(column) != self.m:
            raise DimensionError(f'new column has {len(column)} entries, game has {self.m} rows')
        return ScalarGame(np.column_stack([self._entries, column]))

    def with_row(self, row):
        row = as_vector(row)
        if len(row) != self.n:
            raise DimensionError(f'new row has {len(row)} entries, game has {self.n} columns')
        return ScalarGame(np.vstack([self._entries, row]))

    def without_column(self, j):
        if self.n < 2:
            raise DimensionError('cannot remove the only column')
        if not 0 <= j < self.n:
            raise DimensionError(f'column {j + 1} outside 1..{self.n}')
        return ScalarGame(np.delete(self._entries, j, axis=1))

    def without_row(self, i):
        if self.m < 2:
            raise DimensionError('cannot remove the only row')
        if not 0 <= i < self.m:
            raise DimensionError(f'row {i + 1} outside 1..{self.m}')
        return ScalarGame(np.delete(self._entries, i, axis=0))

    def __add__(self, other):
        if not isinstance(other, ScalarGame):
            return NotImplemented
        if other.shape != self.shape:
            raise DimensionError(f'cannot add {self.shape} and {other.shape} games')
        return ScalarGame(self._entries + other._entries)

    def __le__(self, other):
        if other.shape != self.shape:
            raise DimensionError(f'cannot compare {self.shape} and {other.shape} games')
        return bool(np.all(self._entries <= other._entries))

    def __eq__(self, other):
        if isinstance(other, ScalarGame):
            return self.shape == other.shape and bool(np.all(self._entries == other._entries))
        return NotImplemented

    def __hash__(self):
        return hash(tuple(map(tuple, self._entries)))

    def __repr__(self):
        body = '; '.join(' '.join(render(v) for v in row) for row in self._entries)
        return f'ScalarGame([{body}])'


def _as_scalar_games(matrices):
    games = tuple(m if isinstance(m, ScalarGame) else ScalarGame(m) for m in matrices)
    if not games:
        raise DimensionError('a multicriteria game needs at least one criterion')
    return games


class _MultiGame:
    __slots__ = ('_matrices',)

    def __init__(self, matrices):
        games = _as_scalar_games(matrices)
        m = games[0].m
        for index, game in enumerate(games, start=1):
            if game.m != m:
                raise DimensionError(f'criterion {index} has {game.m} rows, criterion 1 has {m}')
        self._matrices = games

    @property
    def matrices(self):
        return self._matrices

    @property
    def m(self):
        return self._matrices[0].m

    @property
    def k(self):
        return len(self._matrices)

    @property
    def n_vec(self):
        return tuple(a.n for a in self._matrices)

    def criterion(self, index):
        return self._matrices[index]

    def replace(self, index, matrix):
        matrices = list(self._matrices)
        matrices[index] = matrix
        return type(self)(matrices)

    def with_row(self, row_tuple):
        if len(row_tuple) != self.k:
            raise DimensionError(f'need one row per criterion ({self.k}), got {len(row_tuple)}')
        return type(self)([a.with_row(r) for a, r in zip(self._matrices, row_tuple)])

    def without_row(self, i):
        return type(self)([a.without_row(i) for a in self._matrices])

    def shifted(self, constants):
        if len(constants) != self.k:
            raise DimensionError('need one shift per criterion')
        return type(self)([a.shifted(c) for a, c in zip(self._matrices, constants)])

    def __le__(self, other):
        if type(other) is not type(self) or other.k != self.k:
            raise DimensionError('entrywise order needs two games of the same class and k')
        return all(a <= b for a, b in zip(self._matrices, other._matrices))

    def __eq__(self, other):
        if type(other) is type(self):
            return self._matrices == other._matrices
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self._matrices))

    def __repr__(self):
        return f'{type(self).__name__}({", ".join(repr(a) for a in self._matrices)})'


class MultiGameD1(_MultiGame):
    """k criteria sharing player II's column strategy; all matrices are m x n."""

    __slots__ = ()

    game_class = 'd1'

    def __init__(self, matrices):
        super().__init__(matrices)
        n = self._matrices[0].n
        for index, game in enumerate(self._matrices, start=1):
            if game.n != n:
                raise DimensionError(f'criterion {index} has {game.n} columns, criterion 1 has {n}')

    @property
    def n(self):
        return self._matrices[0].n

    def weighted(self, alpha):
        """The scalar game sum_l alpha_l A(l)."""
        if len(alpha) != self.k:
            raise DimensionError(f'{len(alpha)} weights for {self.k} criteria')
        total = sum(
            (a.entries * to_rational(w) for a, w in zip(self._matrices, alpha)),
            np.full(self._matrices[0].shape, Fraction(0), dtype=object),
        )
        return ScalarGame(total)

    def with_column(self, column_tuple):
        if len(column_tuple) != self.k:
            raise DimensionError(f'need one column per criterion ({self.k}), got {len(column_tuple)}')
        return MultiGameD1([a.with_column(c) for a, c in zip(self._matrices, column_tuple)])

    def without_column(self, j):
        return MultiGameD1([a.without_column(j) for a in self._matrices])


class MultiGameD2(_MultiGame):
    """k criteria with per-criterion column strategies; A(l) is m x n_l."""

    __slots__ = ()

    game_class = 'd2'

    def with_column(self, criterion, column):
        return self.replace(criterion, self._matrices[criterion].with_column(column))

    def without_column(self, criterion, j):
        return self.replace(criterion, self._matrices[criterion].without_column(j))
