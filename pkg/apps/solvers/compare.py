"""
Cross-checks of the solvers: sweeps against the brute-force grid oracles,
security strategies against the EM minimax certificate, and security levels
in a game against its product game.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from apps.games.matrices import MultiGameD1
from apps.games.payoffs import PayoffSet, PayoffVector, as_weights
from apps.games.rationals import render
from apps.games.strategies import MixedStrategy, simplex_grid
from apps.games.transforms import as_d2, em_construct, product_game, strategy_product

from .minimax import MinimaxSweepConfig, OracleConfig, lipschitz_slack, require_d1, vminmax_oracle, vminmax_sweep
from .poss import poss_oracle, poss_sweep, poss_weighted, require_d2, security_levels, security_slack

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


@dataclass(frozen=True)
class OracleComparison:
    concept: str
    sweep: PayoffSet
    oracle: PayoffSet
    slack: Fraction
    violations: tuple

    @property
    def sound(self):
        return not self.violations


def dominates_beyond(oracle_payoff, sweep_payoff, slack):
    return oracle_payoff != sweep_payoff and all(o + slack <= s for o, s in zip(oracle_payoff, sweep_payoff))


def oracle_compare(game, sweep_cfg: MinimaxSweepConfig = None, oracle_cfg: OracleConfig = None) -> OracleComparison:
    """
    Compare a sweep with its oracle.

    First-class games go through the minimax pair, everything else through
    the security pair. A violation is an oracle point lying below a swept
    point by at least the grid slack in every criterion. The minimax slack
    covers rounding of both strategies; the security oracle never samples
    y, so its slack covers x alone.
    """
    sweep_cfg = sweep_cfg or MinimaxSweepConfig()
    oracle_cfg = oracle_cfg or OracleConfig.from_settings()
    if isinstance(game, MultiGameD1):
        game = require_d1(game)
        concept, swept, oracle = 'v-minmax', vminmax_sweep(game, sweep_cfg), vminmax_oracle(game, oracle_cfg)
        slack = lipschitz_slack(game, oracle_cfg)
    else:
        game = require_d2(game)
        concept, swept, oracle = 'vposs', poss_sweep(game, sweep_cfg), poss_oracle(game, oracle_cfg)
        slack = security_slack(game, oracle_cfg)

    violations = tuple(
        (o, s)
        for o in oracle.values()
        for s in swept.values()
        if dominates_beyond(o, s, slack)
    )
    if violations:
        logger.warning(f'{len(violations)} oracle point(s) below the {concept} sweep beyond slack {slack}')
    return OracleComparison(concept, swept, oracle, slack, violations)


@dataclass(frozen=True)
class EmCertificate:
    """Outcome of poss_to_minimax_check; truthy when the certificate holds."""

    holds: bool
    beta: MixedStrategy
    weighted_payoff: Fraction
    best_response: Fraction
    security_sum: Fraction
    diagnostic: str = ''

    def __bool__(self):
        return self.holds


def poss_to_minimax_check(game, x_star, alpha, size_cap=None) -> EmCertificate:
    """
    Certify an efficient security strategy as a minimax strategy of EM(game).

    beta is the product of player II's dual answers in the weighted serial
    game. With B = sum_c beta_c AM(c) and u = B alpha, x_star must be a best
    reply to u (x_star . u = min_i u_i) and x_star . u must equal the
    alpha-weighted security levels of x_star.
    """
    game = as_d2(game)
    alpha = as_weights(alpha, game.k)
    x_star = x_star if isinstance(x_star, MixedStrategy) else MixedStrategy(x_star)
    counter = poss_weighted(game, alpha).counter
    beta = strategy_product(counter)
    em = em_construct(game, size_cap)

    combined = np.full((game.m, game.k), ZERO, dtype=object)
    for weight, criterion in zip(beta, em.matrices):
        if weight:
            combined = combined + criterion.entries * weight
    u = combined @ np.array(list(alpha), dtype=object)

    weighted_payoff = x_star.array @ u
    best_response = min(u)
    security_sum = security_levels(game, x_star).weighted_sum(alpha)
    holds = weighted_payoff == best_response == security_sum
    diagnostic = ''
    if not holds:
        diagnostic = (
            f'x* . u = {render(weighted_payoff)}, min_i u_i = {render(best_response)}, '
            f'weighted security levels = {render(security_sum)}'
        )
        logger.warning(f'EM certificate failed at alpha={alpha!r}: {diagnostic}')
    return EmCertificate(holds, beta, weighted_payoff, best_response, security_sum, diagnostic)


@dataclass(frozen=True)
class ProductGameComparison:
    agrees: bool
    mismatches: tuple


def product_game_check(game, x_grid_resolution=4, size_cap=None) -> ProductGameComparison:
    """
    Security levels of every x-grid point agree in the game and its product game.

    Columns of the product game's criterion l repeat those of A(l), so player
    I's worst cases (and with them the security strategies) coincide.
    """
    game = as_d2(game)
    bar = as_d2(product_game(game, size_cap))
    mismatches = []
    for x in simplex_grid(game.m, x_grid_resolution):
        original, replicated = security_levels(game, x), security_levels(bar, x)
        if PayoffVector(original) != PayoffVector(replicated):
            mismatches.append((x, original, replicated))
    return ProductGameComparison(agrees=not mismatches, mismatches=tuple(mismatches))
