"""Seeded random games and strategies for the property suites."""
from fractions import Fraction

from apps.games.matrices import MultiGameD1, MultiGameD2, ScalarGame
from apps.games.strategies import MixedStrategy, StrategyTupleII


def rational(rng, low=-4, high=4, denominators=(1, 2, 3, 4)):
    denominator = rng.choice(denominators)
    return Fraction(rng.randint(low * denominator, high * denominator), denominator)


def matrix(rng, m, n, **kwargs):
    return [[rational(rng, **kwargs) for _ in range(n)] for _ in range(m)]


def scalar_game(rng, max_m=5, max_n=5):
    return ScalarGame(matrix(rng, rng.randint(1, max_m), rng.randint(1, max_n)))


def d1_game(rng, max_m=3, max_k=3, max_n=4, m=None, k=None, n=None):
    m = m or rng.randint(1, max_m)
    k = k or rng.randint(2, max_k)
    n = n or rng.randint(1, max_n)
    return MultiGameD1([matrix(rng, m, n) for _ in range(k)])


def d2_game(rng, max_m=3, max_k=3, max_n=4, m=None, k=None):
    m = m or rng.randint(1, max_m)
    k = k or rng.randint(2, max_k)
    return MultiGameD2([matrix(rng, m, rng.randint(1, max_n)) for _ in range(k)])


def strategy(rng, size):
    """Random rational probability vector; some components may be zero."""
    weights = [rng.randint(0, 6) for _ in range(size)]
    if not any(weights):
        weights[rng.randrange(size)] = 1
    total = sum(weights)
    return MixedStrategy([Fraction(w, total) for w in weights])


def strategy_tuple(rng, n_vec):
    return StrategyTupleII([strategy(rng, n) for n in n_vec])


def positive_shift(rng):
    return Fraction(rng.randint(1, 8), rng.choice((1, 2, 4)))


def mixture(vectors, weights):
    return [sum((w * v[i] for v, w in zip(vectors, weights)), Fraction(0)) for i in range(len(vectors[0]))]


def dominated_column(rng, a, weights=None):
    """A mixture of the columns of `a`, strictly lowered in every row."""
    weights = weights or strategy(rng, a.n)
    column = mixture([a.column(j) for j in range(a.n)], weights)
    return [c - positive_shift(rng) for c in column]


def dominated_row(rng, a, weights):
    """A mixture of the rows of `a`, strictly raised in every column."""
    row = mixture([a.row(i) for i in range(a.m)], weights)
    return [r + positive_shift(rng) for r in row]
