"""
Security levels and Pareto-optimal security strategies for second-class games.

For weights alpha the program

    min sum_l alpha_l v_l  s.t.  x^T A(l) <= v_l 1 for every l, x in the simplex

has as optimal x exactly the security strategies that are efficient for
alpha; its duals, divided by alpha_l per criterion, are an optimal answer
of player II in the weighted serial game.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from apps.games.exceptions import DimensionError, SolverError
from apps.games.matrices import MultiGameD1, MultiGameD2, ScalarGame
from apps.games.payoffs import (
    ParetoFront,
    PayoffPoint,
    PayoffSet,
    PayoffVector,
    WeightVector,
    as_weights,
    weight_grid,
)
from apps.games.rationals import render
from apps.games.strategies import MixedStrategy, StrategyTupleII, simplex_grid

from .lp import Constraint, LinearProgram, Relation, Sense, game_value, optimal_vertices, solve_lp
from .minimax import MinimaxSweepConfig, OracleConfig

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class PossResult:
    x_star: MixedStrategy
    payoff: PayoffVector
    alpha: WeightVector
    counter: StrategyTupleII = None

    def as_point(self):
        return PayoffPoint(payoff=self.payoff, strategy=self.x_star, counter=self.counter, alpha=self.alpha)


def require_d2(game):
    """Scalar games are single-criterion second-class games; first-class games must be converted explicitly."""
    if isinstance(game, MultiGameD2):
        return game
    if isinstance(game, ScalarGame):
        return MultiGameD2([game])
    if isinstance(game, MultiGameD1):
        raise DimensionError('security analysis needs a second-class game; convert with transforms.as_d2')
    raise DimensionError(f'expected a second-class game, got {type(game).__name__}')


def security_levels(game, x) -> PayoffVector:
    """Per criterion, the largest entry of x^T A(l)."""
    game = require_d2(game)
    x = x if isinstance(x, MixedStrategy) else MixedStrategy(x)
    if len(x) != game.m:
        raise DimensionError(f'row strategy of length {len(x)} for a game with {game.m} rows')
    return PayoffVector(max(x.array @ a.entries) for a in game.matrices)


def security_program(game: MultiGameD2, alpha):
    """Variables (x_1..x_m, v_1..v_k); rows ordered criterion by criterion, column by column."""
    m, k = game.m, game.k
    constraints = []
    for index, a in enumerate(game.matrices):
        for j in range(a.n):
            coefficients = list(a.entries[:, j]) + [ZERO] * k
            coefficients[m + index] = -ONE
            constraints.append(Constraint(tuple(coefficients), Relation.LE, ZERO))
    constraints.append(Constraint((ONE,) * m + (ZERO,) * k, Relation.EQ, ONE))
    return LinearProgram(
        objective=(ZERO,) * m + tuple(alpha),
        sense=Sense.MIN,
        constraints=tuple(constraints),
        bounds=((ZERO, None),) * m + ((None, None),) * k,
    )


def _counter_strategy(game, alpha, duals):
    blocks, offset = [], 0
    for a, weight in zip(game.matrices, alpha):
        multipliers = [-d for d in duals[offset:offset + a.n]]
        offset += a.n
        if sum(multipliers, ZERO) != weight:
            raise SolverError(f'dual block sums to {render(sum(multipliers, ZERO))}, expected {render(weight)}')
        blocks.append(MixedStrategy([mu / weight for mu in multipliers]))
    return StrategyTupleII(blocks)


def _checked_result(game, alpha, values, objective=None, counter=None):
    x_star = MixedStrategy(values[:game.m])
    levels = values[game.m:]
    payoff = security_levels(game, x_star)
    if tuple(levels) != tuple(payoff):
        raise SolverError(f'LP levels {[render(v) for v in levels]} differ from security levels {payoff!r}')
    if objective is not None and payoff.weighted_sum(alpha) != objective:
        raise SolverError('weighted security levels differ from the LP optimum')
    return PossResult(x_star=x_star, payoff=payoff, alpha=alpha, counter=counter)


def poss_weighted(game, alpha) -> PossResult:
    """One efficient security strategy for the weights alpha, with player II's dual answer."""
    game = require_d2(game)
    alpha = as_weights(alpha, game.k)
    solution = solve_lp(security_program(game, alpha))
    if not solution.is_optimal:
        raise SolverError(f'the security program came back {solution.status.value}')
    counter = _counter_strategy(game, alpha, solution.duals)
    return _checked_result(game, alpha, solution.values, solution.objective, counter)


def poss_weighted_ties(game, alpha, cap=None):
    """Every optimal vertex of the security program for alpha, as PossResults."""
    game = require_d2(game)
    alpha = as_weights(alpha, game.k)
    return [_checked_result(game, alpha, values) for values in optimal_vertices(security_program(game, alpha), cap=cap)]


def poss_sweep(game, cfg: MinimaxSweepConfig = None) -> PayoffSet:
    """Union over the weight grid of efficient security payoffs, Pareto-min filtered."""
    cfg = cfg or MinimaxSweepConfig()
    game = require_d2(game)
    resolution = cfg.resolution_for(game.k)
    front = ParetoFront(minimize=True)
    for alpha in weight_grid(game.k, resolution):
        if cfg.enumerate_ties:
            results = poss_weighted_ties(game, alpha, cap=cfg.cap())
        else:
            results = [poss_weighted(game, alpha)]
        front.extend(result.as_point() for result in results)
    swept = front.as_set()
    logger.debug(f'Security sweep at resolution {resolution}: {len(swept)} points')
    return swept


def security_slack(game, cfg: OracleConfig):
    """Largest change of a security level when x is rounded to the oracle's x-grid."""
    largest = max(abs(v) for a in game.matrices for v in a.entries.flat)
    return 2 * largest * Fraction(1, cfg.x_grid_resolution)


def poss_oracle(game, cfg: OracleConfig) -> PayoffSet:
    """Pareto-minimal security levels over the x-grid."""
    game = require_d2(game)
    return ParetoFront(minimize=True).extend(
        PayoffPoint(payoff=security_levels(game, x), strategy=x)
        for x in simplex_grid(game.m, cfg.x_grid_resolution)
    ).as_set()


def poss_player_two(game, cfg: MinimaxSweepConfig = None) -> PayoffSet:
    """
    Player II's Pareto-optimal security payoffs.

    In a second-class game player II answers each criterion with its own
    block, so the guaranteed levels split criterion by criterion and the
    only efficient point is (val(A(1)), ..., val(A(k))), reached by the
    tuple of optimal column strategies.

    In a first-class game one column strategy faces every criterion. Player
    II maximizing over A(l) is then player I minimizing over -A(l)^T; the
    swapped game is swept and its payoffs negated back.
    """
    if isinstance(game, MultiGameD1):
        swapped = MultiGameD2([a.transposed().negated() for a in game.matrices])
        points = []
        for point in poss_sweep(swapped, cfg):
            points.append(PayoffPoint(
                payoff=PayoffVector(-v for v in point.payoff),
                strategy=point.strategy,
                alpha=point.alpha,
            ))
        return PayoffSet(points)

    game = require_d2(game)
    results = [game_value(a) for a in game.matrices]
    return PayoffSet([PayoffPoint(
        payoff=PayoffVector(r.value for r in results),
        strategy=StrategyTupleII([r.y_opt for r in results]),
    )])
