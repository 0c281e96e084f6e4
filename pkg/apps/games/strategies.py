"""Mixed strategies on a simplex and player II's strategy tuples for the second class."""
from fractions import Fraction
from itertools import combinations

from .exceptions import DimensionError, StrategyError
from .rationals import as_vector, render


class MixedStrategy:
    """Probability vector with exact components."""

    __slots__ = ('_weights', '_array')

    def __init__(self, weights):
        array = as_vector(weights)
        if len(array) == 0:
            raise StrategyError('a mixed strategy needs at least one component')
        if any(w < 0 for w in array):
            raise StrategyError(f'negative probability in {[render(w) for w in array]}')
        total = sum(array, Fraction(0))
        if total != 1:
            raise StrategyError(f'probabilities sum to {render(total)}, not 1')
        self._array = array
        self._weights = tuple(array)

    @classmethod
    def pure(cls, size, index):
        if not 0 <= index < size:
            raise DimensionError(f'pure strategy {index + 1} outside 1..{size}')
        return cls([1 if i == index else 0 for i in range(size)])

    @classmethod
    def uniform(cls, size):
        return cls([Fraction(1, size)] * size)

    @property
    def weights(self):
        return self._weights

    @property
    def array(self):
        return self._array

    @property
    def support(self):
        return tuple(i for i, w in enumerate(self._weights) if w != 0)

    def mix(self, other, share):
        """share*self + (1-share)*other, exact."""
        if len(other) != len(self):
            raise DimensionError('cannot mix strategies of different lengths')
        share = Fraction(share)
        return MixedStrategy([share * a + (1 - share) * b for a, b in zip(self, other)])

    def __len__(self):
        return len(self._weights)

    def __iter__(self):
        return iter(self._weights)

    def __getitem__(self, index):
        return self._weights[index]

    def __eq__(self, other):
        if isinstance(other, MixedStrategy):
            return self._weights == other._weights
        return NotImplemented

    def __hash__(self):
        return hash(self._weights)

    def __repr__(self):
        return f'MixedStrategy({", ".join(render(w) for w in self._weights)})'


class StrategyTupleII:
    """One mixed strategy per criterion: player II's strategy space in the second class."""

    __slots__ = ('_blocks',)

    def __init__(self, blocks):
        blocks = tuple(b if isinstance(b, MixedStrategy) else MixedStrategy(b) for b in blocks)
        if not blocks:
            raise DimensionError('a strategy tuple needs at least one block')
        self._blocks = blocks

    @property
    def blocks(self):
        return self._blocks

    @property
    def n_vec(self):
        return tuple(len(b) for b in self._blocks)

    def __len__(self):
        return len(self._blocks)

    def __iter__(self):
        return iter(self._blocks)

    def __getitem__(self, index):
        return self._blocks[index]

    def __eq__(self, other):
        if isinstance(other, StrategyTupleII):
            return self._blocks == other._blocks
        return NotImplemented

    def __hash__(self):
        return hash(self._blocks)

    def __repr__(self):
        return f'StrategyTupleII({", ".join(repr(b) for b in self._blocks)})'


def compositions(total, parts, minimum=0):
    """All tuples of `parts` integers >= minimum summing to `total`, lexicographic."""
    free = total - parts * minimum
    if parts < 1 or free < 0:
        return []
    result = []
    # stars and bars over the free units
    for bars in combinations(range(free + parts - 1), parts - 1):
        previous = -1
        counts = []
        for bar in bars:
            counts.append(bar - previous - 1)
            previous = bar
        counts.append(free + parts - 1 - previous - 1)
        result.append(tuple(c + minimum for c in counts))
    result.sort(reverse=True)
    return result


def simplex_grid(dim, resolution):
    """Every point of the dim-simplex whose coordinates are multiples of 1/resolution."""
    if dim < 1 or resolution < 1:
        raise DimensionError('simplex grids need dim >= 1 and resolution >= 1')
    return [
        MixedStrategy([Fraction(c, resolution) for c in counts])
        for counts in compositions(resolution, dim)
    ]
