"""
Game constructions over tuples of columns.

Tuple-indexed columns c = (c(1), ..., c(k)) are always laid out in
lexicographic order with c(k) varying fastest.
"""
import logging
from fractions import Fraction
from itertools import product
from math import prod

import numpy as np

from . import conf
from .exceptions import DimensionError, SizeError
from .matrices import MultiGameD1, MultiGameD2, ScalarGame
from .rationals import to_rational
from .strategies import MixedStrategy, StrategyTupleII

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


def column_tuples(n_vec):
    """Every ColumnIndexTuple (0-based) in layout order."""
    return list(product(*(range(n) for n in n_vec)))


def guard_size(n_vec, size_cap=None):
    cap = conf.size_cap() if size_cap is None else size_cap
    size = prod(n_vec)
    if size > cap:
        raise SizeError(size, cap)
    logger.debug(f'Building {size} column tuples for n_vec={tuple(n_vec)}')
    return size


def as_d2(game):
    """Explicit first-class -> second-class conversion (player II may now split its strategy)."""
    if isinstance(game, MultiGameD2):
        return game
    if isinstance(game, (MultiGameD1, ScalarGame)):
        return MultiGameD2(game.matrices)
    raise DimensionError(f'cannot convert {type(game).__name__} to a second-class game')


def as_d1(game):
    """Explicit second-class -> first-class conversion; needs equal column counts."""
    if isinstance(game, MultiGameD1):
        return game
    if isinstance(game, (MultiGameD2, ScalarGame)):
        if len(set(game.n_vec if isinstance(game, MultiGameD2) else (game.n,))) != 1:
            raise DimensionError(f'column counts {game.n_vec} differ; no first-class reading')
        return MultiGameD1(game.matrices)
    raise DimensionError(f'cannot convert {type(game).__name__} to a first-class game')


def amalgamate(matrices, weights=None, size_cap=None) -> ScalarGame:
    """
    M(w_1 A(1), ..., w_k A(k)): entry (i, c) = sum_l w_l A(l)[i, c(l)].

    `matrices` may be a list of scalar games or a multicriteria game.
    """
    if isinstance(matrices, (MultiGameD1, MultiGameD2)):
        matrices = matrices.matrices
    matrices = [a if isinstance(a, ScalarGame) else ScalarGame(a) for a in matrices]
    if not matrices:
        raise DimensionError('nothing to amalgamate')
    m = matrices[0].m
    for index, a in enumerate(matrices, start=1):
        if a.m != m:
            raise DimensionError(f'matrix {index} has {a.m} rows, matrix 1 has {m}')
    if weights is None:
        weights = [Fraction(1)] * len(matrices)
    elif len(weights) != len(matrices):
        raise DimensionError(f'{len(weights)} weights for {len(matrices)} matrices')
    weights = [to_rational(w) for w in weights]
    n_vec = tuple(a.n for a in matrices)
    guard_size(n_vec, size_cap)

    scaled = [a.entries * w for a, w in zip(matrices, weights)]
    columns = []
    for c in column_tuples(n_vec):
        column = np.full(m, ZERO, dtype=object)
        for block, j in zip(scaled, c):
            column = column + block[:, j]
        columns.append(column)
    return ScalarGame(np.column_stack(columns))


def em_construct(game, size_cap=None) -> MultiGameD1:
    """One m x k criterion per column tuple c, joining column c(l) of every A(l)."""
    game = as_d2(game)
    guard_size(game.n_vec, size_cap)
    criteria = []
    for c in column_tuples(game.n_vec):
        joined = np.column_stack([a.entries[:, j] for a, j in zip(game.matrices, c)])
        criteria.append(ScalarGame(joined))
    return MultiGameD1(criteria)


def product_game(game, size_cap=None) -> MultiGameD1:
    """Criterion l's entry at (i, (j_1..j_k)) is A(l)[i, j_l]."""
    game = as_d2(game)
    tuples = column_tuples(game.n_vec)
    guard_size(game.n_vec, size_cap)
    criteria = []
    for index, a in enumerate(game.matrices):
        criteria.append(ScalarGame(a.entries[:, [c[index] for c in tuples]]))
    return MultiGameD1(criteria)


def strategy_product(y: StrategyTupleII) -> MixedStrategy:
    """ybar[(j_1..j_k)] = prod_l y(l)[j_l]."""
    y = y if isinstance(y, StrategyTupleII) else StrategyTupleII(y)
    cells = [prod((block[j] for block, j in zip(y, c)), start=Fraction(1)) for c in column_tuples(y.n_vec)]
    return MixedStrategy(cells)


def strategy_marginal(y_bar, n_vec) -> StrategyTupleII:
    """Block l, entry j: total mass of the cells whose l-th index is j."""
    y_bar = y_bar if isinstance(y_bar, MixedStrategy) else MixedStrategy(y_bar)
    n_vec = tuple(n_vec)
    if len(y_bar) != prod(n_vec):
        raise DimensionError(f'strategy of length {len(y_bar)} over {prod(n_vec)} column tuples')
    blocks = [[ZERO] * n for n in n_vec]
    for mass, c in zip(y_bar, column_tuples(n_vec)):
        for index, j in enumerate(c):
            blocks[index][j] += mass
    return StrategyTupleII(blocks)

