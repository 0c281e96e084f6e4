"""
Extended minimax payoff vectors for first-class games (player II shares one strategy).

vminmax_oracle evaluates the defining v-min / v-max construction on strategy
grids; vminmax_weighted and vminmax_sweep go through weighted scalarizations
val(sum_l alpha_l A(l)) and keep only exact payoff vectors.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from apps.games import conf
from apps.games.exceptions import DimensionError, SolverError, WeightError
from apps.games.matrices import MultiGameD1, ScalarGame
from apps.games.payoffs import (
    ParetoFront,
    PayoffPoint,
    PayoffSet,
    PayoffVector,
    as_weights,
    default_weight_resolution,
    pareto_max,
    weight_grid,
)
from apps.games.rationals import render
from apps.games.strategies import MixedStrategy, simplex_grid

from .lp import Player, game_value, optimal_strategy_vertices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinimaxSweepConfig:
    """
    Weight grid and tie policy shared by the minimax and security sweeps.

    weight_grid_resolution=None picks the per-k default (16 for k=2, 8 for
    k=3, 2k beyond). face_samples > 0 adds that many interior points on each
    segment between two optimal vertices.
    """

    weight_grid_resolution: int = None
    enumerate_ties: bool = True
    tie_cap: int = None
    face_samples: int = 0

    def resolution_for(self, k):
        resolution = self.weight_grid_resolution or conf.weight_grid() or default_weight_resolution(k)
        if resolution < k:
            raise WeightError(f'weight grid resolution {resolution} must be at least k={k}')
        return resolution

    def cap(self):
        return self.tie_cap or conf.tie_cap()


@dataclass(frozen=True)
class OracleConfig:
    x_grid_resolution: int = 50
    y_grid_resolution: int = 40

    def __post_init__(self):
        if self.x_grid_resolution < 1 or self.y_grid_resolution < 1:
            raise DimensionError('oracle grid resolutions must be at least 1')

    @classmethod
    def from_settings(cls, x_grid=None, y_grid=None):
        default_x, default_y = conf.oracle_grids()
        return cls(x_grid or default_x, y_grid or default_y)


def require_d1(game):
    """Scalar games are single-criterion first-class games."""
    if isinstance(game, MultiGameD1):
        return game
    if isinstance(game, ScalarGame):
        return MultiGameD1([game])
    raise DimensionError(f'expected a first-class game, got {type(game).__name__}')


def lipschitz_slack(game, oracle_cfg):
    """Largest payoff change caused by rounding both strategies to the oracle grids."""
    largest = max(abs(v) for a in game.matrices for v in a.entries.flat)
    return 2 * largest * (Fraction(1, oracle_cfg.x_grid_resolution) + Fraction(1, oracle_cfg.y_grid_resolution))


def v_w1(game, x, cfg: OracleConfig) -> PayoffSet:
    """Pareto-maximal payoffs player II can reach against x, over the y-grid."""
    game = require_d1(game)
    x = x if isinstance(x, MixedStrategy) else MixedStrategy(x)
    if len(x) != game.m:
        raise DimensionError(f'row strategy of length {len(x)} for a game with {game.m} rows')
    row_payoffs = [x.array @ a.entries for a in game.matrices]
    candidates = []
    for y in simplex_grid(game.n, cfg.y_grid_resolution):
        payoff = PayoffVector(r @ y.array for r in row_payoffs)
        candidates.append(PayoffPoint(payoff=payoff, strategy=x, counter=y))
    return pareto_max(candidates)


def vminmax_oracle(game, cfg: OracleConfig) -> PayoffSet:
    """v-min over the x-grid of the union of v_w1(x)."""
    game = require_d1(game)
    front = ParetoFront(minimize=True)
    for x in simplex_grid(game.m, cfg.x_grid_resolution):
        front.extend(v_w1(game, x, cfg))
    return front.as_set()


def _face_points(vertices, samples):
    points = list(vertices)
    if samples <= 0:
        return points
    for first, second in zip(vertices, vertices[1:]):
        for step in range(1, samples + 1):
            points.append(first.mix(second, Fraction(samples + 1 - step, samples + 1)))
    return points


def vminmax_weighted(game, alpha, cfg: MinimaxSweepConfig = None) -> PayoffSet:
    """
    Payoff vectors of optimal pairs in the game sum_l alpha_l A(l).

    Every returned z satisfies sum_l alpha_l z_l = val(sum_l alpha_l A(l)).
    """
    cfg = cfg or MinimaxSweepConfig()
    game = require_d1(game)
    alpha = as_weights(alpha, game.k)
    weighted = game.weighted(alpha)
    result = game_value(weighted)

    if cfg.enumerate_ties:
        x_points = optimal_strategy_vertices(weighted, Player.I, cap=cfg.cap())
        y_points = _face_points(
            optimal_strategy_vertices(weighted, Player.II, cap=cfg.cap()), cfg.face_samples
        )
    else:
        x_points, y_points = [result.x_opt], [result.y_opt]

    points = []
    for x, y in product(x_points, y_points):
        if len(points) >= cfg.cap():
            logger.warning(f'Tie cap {cfg.cap()} reached at alpha={alpha!r}')
            break
        payoff = PayoffVector(x.array @ a.entries @ y.array for a in game.matrices)
        if payoff.weighted_sum(alpha) != result.value:
            raise SolverError(
                f'weighted sum {render(payoff.weighted_sum(alpha))} differs from '
                f'the scalarized value {render(result.value)} at alpha={alpha!r}'
            )
        points.append(PayoffPoint(payoff=payoff, strategy=x, counter=y, alpha=alpha))
    return PayoffSet(points)


def vminmax_sweep(game, cfg: MinimaxSweepConfig = None) -> PayoffSet:
    """Union of vminmax_weighted over the weight grid, Pareto-min filtered."""
    cfg = cfg or MinimaxSweepConfig()
    game = require_d1(game)
    resolution = cfg.resolution_for(game.k)
    front = ParetoFront(minimize=True)
    for alpha in weight_grid(game.k, resolution):
        front.extend(vminmax_weighted(game, alpha, cfg))
    swept = front.as_set()
    logger.debug(f'Minimax sweep at resolution {resolution}: {len(swept)} points')
    return swept
