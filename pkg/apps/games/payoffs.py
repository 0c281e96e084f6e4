"""
Payoff vectors, scalarization weights, annotated payoff sets and Pareto filtering.
"""
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import DimensionError, WeightError
from .matrices import MultiGameD1, MultiGameD2
from .rationals import render, to_rational
from .strategies import MixedStrategy, StrategyTupleII, compositions


class PayoffVector(tuple):
    """One exact payoff per criterion."""

    __slots__ = ()

    def __new__(cls, components):
        return super().__new__(cls, (to_rational(c) for c in components))

    @property
    def k(self):
        return len(self)

    def weakly_below(self, other):
        """self <= other componentwise with at least one strict component."""
        _check_lengths(self, other)
        return self != other and all(a <= b for a, b in zip(self, other))

    def weakly_above(self, other):
        _check_lengths(self, other)
        return self != other and all(a >= b for a, b in zip(self, other))

    def weighted_sum(self, alpha):
        _check_lengths(self, alpha)
        return sum((a * z for a, z in zip(alpha, self)), Fraction(0))

    def render(self):
        return [render(c) for c in self]

    def __repr__(self):
        return f'({", ".join(render(c) for c in self)})'


def _check_lengths(left, right):
    if len(left) != len(right):
        raise DimensionError(f'cannot compare vectors of lengths {len(left)} and {len(right)}')


class WeightVector(tuple):
    """A point of the open simplex: every weight strictly positive, total exactly 1."""

    __slots__ = ()

    def __new__(cls, alphas):
        values = tuple(to_rational(a) for a in alphas)
        if not values:
            raise WeightError('a weight vector needs at least one component')
        if any(a <= 0 for a in values):
            raise WeightError(f'weights must be strictly positive: {[render(a) for a in values]}')
        total = sum(values, Fraction(0))
        if total != 1:
            raise WeightError(f'weights sum to {render(total)}, not 1')
        return super().__new__(cls, values)

    @property
    def k(self):
        return len(self)

    def render(self):
        return [render(a) for a in self]

    def __repr__(self):
        return f'WeightVector({", ".join(render(a) for a in self)})'


def as_weights(alpha, k=None):
    weights = alpha if isinstance(alpha, WeightVector) else WeightVector(alpha)
    if k is not None and len(weights) != k:
        raise DimensionError(f'{len(weights)} weights for {k} criteria')
    return weights


def default_weight_resolution(k):
    if k == 1:
        return 1
    if k == 2:
        return 16
    if k == 3:
        return 8
    return 2 * k


def weight_grid(k, resolution):
    """Strictly positive weight vectors with components in {i/resolution}."""
    if resolution < k:
        raise WeightError(f'weight grid resolution {resolution} is below k={k}; no interior weights')
    return [
        WeightVector([Fraction(c, resolution) for c in counts])
        for counts in compositions(resolution, k, minimum=1)
    ]


@dataclass(frozen=True)
class PayoffPoint:
    """A payoff vector with its provenance."""

    payoff: PayoffVector
    strategy: MixedStrategy = None
    counter: object = None
    alpha: WeightVector = None


class PayoffSet:
    """
    Finite set of annotated payoff vectors.

    Equality compares payoff values only; annotations record provenance.
    Points are kept sorted by payoff, which makes rendering deterministic.
    """

    __slots__ = ('_points',)

    def __init__(self, points=()):
        unique = {}
        for point in points:
            point = _as_point(point)
            unique.setdefault(point.payoff, point)
        self._points = tuple(unique[key] for key in sorted(unique))

    @property
    def points(self):
        return self._points

    @property
    def payoffs(self):
        return frozenset(p.payoff for p in self._points)

    def values(self):
        return [p.payoff for p in self._points]

    def annotations(self, payoff):
        payoff = PayoffVector(payoff)
        return [p for p in self._points if p.payoff == payoff]

    def __len__(self):
        return len(self._points)

    def __iter__(self):
        return iter(self._points)

    def __contains__(self, payoff):
        if isinstance(payoff, PayoffPoint):
            payoff = payoff.payoff
        return PayoffVector(payoff) in self.payoffs

    def __eq__(self, other):
        if isinstance(other, PayoffSet):
            return self.payoffs == other.payoffs
        return NotImplemented

    def __hash__(self):
        return hash(self.payoffs)

    def __repr__(self):
        return f'PayoffSet({{{", ".join(repr(p.payoff) for p in self._points)}}})'


def _as_point(item):
    if isinstance(item, PayoffPoint):
        return item
    return PayoffPoint(payoff=PayoffVector(item))


class ParetoFront:
    """
    Incrementally maintained set of non-dominated payoff points.

    With minimize=True a point is dropped when another point lies weakly
    below it; with minimize=False when another point lies weakly above it.
    """

    def __init__(self, minimize=True):
        self.minimize = minimize
        self._front = []
        self._k = None

    def _dominates(self, left, right):
        if self.minimize:
            return all(a <= b for a, b in zip(left, right))
        return all(a >= b for a, b in zip(left, right))

    def update(self, item):
        """Offer a point; returns True when the front changed."""
        point = _as_point(item)
        if self._k is None:
            self._k = len(point.payoff)
        elif len(point.payoff) != self._k:
            raise DimensionError(f'payoff of length {len(point.payoff)} in a front of length {self._k}')

        to_remove = []
        for old in self._front:
            # old equal to the new point also counts: the first representative stays
            if self._dominates(old.payoff, point.payoff):
                return False
            if self._dominates(point.payoff, old.payoff):
                to_remove.append(old)
        for old in to_remove:
            self._front.remove(old)
        self._front.append(point)
        return True

    def extend(self, items):
        for item in items:
            self.update(item)
        return self

    def as_set(self):
        return PayoffSet(self._front)


def pareto_min(points):
    """Points not weakly dominated from below by any other input point."""
    return ParetoFront(minimize=True).extend(points).as_set()


def pareto_max(points):
    return ParetoFront(minimize=False).extend(points).as_set()


def payoff_d1(game: MultiGameD1, x, y):
    """(x^T A(1) y, ..., x^T A(k) y) for a first-class game."""
    x = x if isinstance(x, MixedStrategy) else MixedStrategy(x)
    y = y if isinstance(y, MixedStrategy) else MixedStrategy(y)
    if len(x) != game.m or len(y) != game.n:
        raise DimensionError(
            f'strategies of lengths ({len(x)}, {len(y)}) for a {game.m}x{game.n} game'
        )
    return PayoffVector(x.array @ a.entries @ y.array for a in game.matrices)


def payoff_d2(game: MultiGameD2, x, y):
    """(x^T A(1) y(1), ..., x^T A(k) y(k)) for a second-class game."""
    x = x if isinstance(x, MixedStrategy) else MixedStrategy(x)
    y = y if isinstance(y, StrategyTupleII) else StrategyTupleII(y)
    if len(x) != game.m:
        raise DimensionError(f'row strategy of length {len(x)} for a game with {game.m} rows')
    if y.n_vec != game.n_vec:
        raise DimensionError(f'column blocks {y.n_vec} do not match the game columns {game.n_vec}')
    return PayoffVector(x.array @ a.entries @ block.array for a, block in zip(game.matrices, y))
