"""
Command dispatch for the solve management command.

Every command returns a Report holding human-readable lines and one
structured document; exact values are always "p/q" strings, decimals are
only added next to them.
"""
import logging
from dataclasses import dataclass, field

from rest_framework.renderers import JSONRenderer

from apps.axioms.checks import AxiomCheckConfig, AxiomInstance, Verdict, check_axiom
from apps.axioms.table import independence_table
from apps.solvers.compare import oracle_compare, poss_to_minimax_check, product_game_check
from apps.solvers.lp import Player, game_value
from apps.solvers.minimax import MinimaxSweepConfig, OracleConfig, vminmax_sweep, vminmax_weighted
from apps.solvers.poss import (
    poss_player_two,
    poss_sweep,
    poss_weighted,
    poss_weighted_ties,
    security_levels,
)

from .exceptions import DimensionError
from .matrices import MultiGameD1, ScalarGame
from .payoffs import PayoffSet
from .rationals import render, render_decimal
from .serializers import game_document
from .strategies import StrategyTupleII
from .transforms import (
    amalgamate,
    as_d1,
    as_d2,
    em_construct,
    product_game,
)

logger = logging.getLogger(__name__)

COMMANDS = (
    'value',
    'minimax',
    'poss',
    'security',
    'amalgamate',
    'em',
    'product-game',
    'check-axiom',
    'independence-table',
    'oracle-compare',
)

# commands that run without a game file
GAMELESS = ('independence-table',)


@dataclass
class RunOptions:
    """Flag values of one invocation; list-valued flags are already parsed."""

    grid: int = None
    x_grid: int = None
    y_grid: int = None
    ties: bool = True
    tie_cap: int = None
    size_cap: int = None
    alpha: tuple = None
    x: tuple = None
    weights: tuple = None
    axiom: str = None
    subject: str = None
    other: object = None
    criterion: int = None
    index: int = None
    line: tuple = None
    player: str = 'I'
    face_samples: int = 0
    decimals: bool = False

    def sweep_config(self):
        return MinimaxSweepConfig(
            weight_grid_resolution=self.grid,
            enumerate_ties=self.ties,
            tie_cap=self.tie_cap,
            face_samples=self.face_samples,
        )

    def oracle_config(self):
        return OracleConfig.from_settings(self.x_grid, self.y_grid)


@dataclass
class Report:
    command: str
    lines: list = field(default_factory=list)
    result: dict = field(default_factory=dict)
    game: dict = None
    failed_axiom: bool = False

    @property
    def text(self):
        return '\n'.join(self.lines) + '\n'

    def document(self):
        document = {'command': self.command}
        if self.game is not None:
            document['game'] = self.game
        document['result'] = self.result
        return document

    def structured(self):
        return JSONRenderer().render(self.document(), renderer_context={'indent': 2}).decode('utf-8') + '\n'


def _vector(values, options, key):
    block = {key: [render(v) for v in values]}
    if options.decimals:
        block[f'{key}_decimal'] = [render_decimal(v) for v in values]
    return block


def _fmt(values):
    return f'({", ".join(render(v) for v in values)})'


def _point_block(point, options):
    block = _vector(point.payoff, options, 'payoff')
    if point.alpha is not None:
        block['alpha'] = point.alpha.render()
    if point.strategy is not None:
        block['strategy'] = _strategy(point.strategy)
    if point.counter is not None:
        block['counter'] = _strategy(point.counter)
    return block


def _strategy(strategy):
    if isinstance(strategy, StrategyTupleII):
        return [[render(v) for v in b] for b in strategy]
    return [render(v) for v in strategy]


def _payoff_set_report(report, payoffs: PayoffSet, options, label):
    report.result['points'] = [_point_block(p, options) for p in payoffs]
    report.lines.append(f'{label}: {len(payoffs)} point(s)')
    for point in payoffs:
        suffix = f'  alpha={_fmt(point.alpha)}' if point.alpha is not None else ''
        report.lines.append(f'  {_fmt(point.payoff)}{suffix}')


def _scalar(game):
    if isinstance(game, ScalarGame):
        return game
    if game.k == 1:
        return game.matrices[0]
    raise DimensionError(f'value needs a single-criterion game, got k = {game.k}')


def _value(report, game, options):
    result = game_value(_scalar(game), vertices=options.ties, cap=options.tie_cap)
    report.result['value'] = render(result.value)
    if options.decimals:
        report.result['value_decimal'] = render_decimal(result.value)
    report.result['x'] = [render(v) for v in result.x_opt]
    report.result['y'] = [render(v) for v in result.y_opt]
    report.lines += [f'value: {render(result.value)}', f'x*: {_fmt(result.x_opt)}', f'y*: {_fmt(result.y_opt)}']
    if options.ties:
        report.result['x_vertices'] = [[render(v) for v in x] for x in result.x_vertices]
        report.result['y_vertices'] = [[render(v) for v in y] for y in result.y_vertices]


def _minimax(report, game, options):
    game = as_d1(game)
    cfg = options.sweep_config()
    if options.alpha:
        payoffs = vminmax_weighted(game, options.alpha, cfg)
    else:
        payoffs = vminmax_sweep(game, cfg)
    _payoff_set_report(report, payoffs, options, 'extended minimax payoffs')


def _poss(report, game, options):
    if isinstance(game, MultiGameD1) and Player(options.player) == Player.I:
        logger.info('Reading the first-class game as a second-class game')
    cfg = options.sweep_config()
    if Player(options.player) == Player.II:
        payoffs = poss_player_two(game, cfg)
        _payoff_set_report(report, payoffs, options, 'player II security payoffs')
        return
    game = as_d2(game)
    if options.alpha:
        if options.ties:
            results = poss_weighted_ties(game, options.alpha, cap=cfg.cap())
        else:
            results = [poss_weighted(game, options.alpha)]
        payoffs = PayoffSet(r.as_point() for r in results)
        if not options.ties:
            counter = results[0].counter
            report.result['counter'] = [[render(v) for v in block] for block in counter]
    else:
        payoffs = poss_sweep(game, cfg)
    _payoff_set_report(report, payoffs, options, 'Pareto-optimal security payoffs')


def _security(report, game, options):
    if not options.x:
        raise DimensionError('security needs a row strategy (--x)')
    levels = security_levels(as_d2(game), options.x)
    report.result['x'] = [render(v) for v in options.x]
    report.result.update(_vector(levels, options, 'levels'))
    report.lines.append(f'security levels at x={_fmt(options.x)}: {_fmt(levels)}')


def _game_result(report, game, label):
    report.result['game'] = game_document(game)
    report.lines.append(f'{label}: {game.game_class} game, m={game.m}, k={game.k}')
    for index, a in enumerate(game.matrices, start=1):
        if game.k > 1:
            report.lines.append(f'criterion {index}:')
        for row in a.rows():
            report.lines.append('  ' + ' '.join(render(v) for v in row))


def _amalgamate(report, game, options):
    merged = amalgamate(game, weights=options.weights, size_cap=options.size_cap)
    _game_result(report, merged, 'amalgamated game')


def _em(report, game, options):
    game = as_d2(game)
    _game_result(report, em_construct(game, options.size_cap), 'EM game')
    if options.alpha:
        result = poss_weighted(game, options.alpha)
        certificate = poss_to_minimax_check(game, result.x_star, options.alpha, options.size_cap)
        report.result['certificate'] = {
            'holds': certificate.holds,
            'x': [render(v) for v in result.x_star],
            'beta': [render(v) for v in certificate.beta],
            'weighted_payoff': render(certificate.weighted_payoff),
            'best_response': render(certificate.best_response),
            'security_sum': render(certificate.security_sum),
        }
        verdict = 'holds' if certificate.holds else f'fails ({certificate.diagnostic})'
        report.lines.append(f'minimax certificate for x*={_fmt(result.x_star)}: {verdict}')


def _product_game(report, game, options):
    game = as_d2(game)
    _game_result(report, product_game(game, options.size_cap), 'product game')
    comparison = product_game_check(game, size_cap=options.size_cap)
    report.result['security_levels_agree'] = comparison.agrees
    report.lines.append(f'security levels agree on the x-grid: {"yes" if comparison.agrees else "no"}')


def _instance(game, options):
    criterion = None if options.criterion is None else options.criterion - 1
    index = None if options.index is None else options.index - 1
    line = options.line
    if line is not None and len(line) == 1:
        line = line[0]
    alpha = options.alpha[0] if options.alpha and len(options.alpha) == 1 else None
    return AxiomInstance(
        game=game,
        other=options.other,
        criterion=criterion,
        line=line,
        index=index,
        alpha=alpha,
    )


def _axiom_block(report_):
    return {
        'axiom': report_.axiom.value,
        'subject': report_.subject.value,
        'description': report_.description,
        'verdict': report_.verdict.value,
        'witness': report_.witness,
        'note': report_.note,
    }


def _check_axiom(report, game, options):
    if not options.axiom or not options.subject:
        raise DimensionError('check-axiom needs --axiom and --subject')
    cfg = AxiomCheckConfig(sweep=options.sweep_config())
    outcome = check_axiom(options.axiom, options.subject, _instance(game, options), cfg)
    report.result.update(_axiom_block(outcome))
    report.failed_axiom = outcome.verdict == Verdict.FAILS
    report.lines.append(f'{outcome.axiom.value} for {outcome.subject.value}: {outcome.verdict.value}')
    report.lines.append(f'  {outcome.description}')
    if outcome.note:
        report.lines.append(f'  {outcome.note}')


def _independence_table(report, game, options):
    table = independence_table(AxiomCheckConfig(sweep=options.sweep_config()))
    report.result['cells'] = [_axiom_block(r) for r in table.reports]
    report.result['external'] = list(table.external)
    for r in table.reports:
        report.lines.append(f'{r.subject.value:<9} {r.axiom.value}  {r.verdict.value:<13} {r.description}')
    for cell in table.external:
        report.lines.append(f'{cell["subject"]:<9} {cell["axioms"]}  {cell["verdict"]}')


def _oracle_compare(report, game, options):
    comparison = oracle_compare(game, options.sweep_config(), options.oracle_config())
    report.result['concept'] = comparison.concept
    report.result['slack'] = render(comparison.slack)
    report.result['sweep'] = [p.render() for p in comparison.sweep.values()]
    report.result['oracle_size'] = len(comparison.oracle)
    report.result['violations'] = [[o.render(), s.render()] for o, s in comparison.violations]
    report.lines += [
        f'{comparison.concept}: {len(comparison.sweep)} swept point(s), {len(comparison.oracle)} oracle point(s)',
        f'slack: {render(comparison.slack)}',
        f'soundness violations: {len(comparison.violations)}',
    ]


HANDLERS = {
    'value': _value,
    'minimax': _minimax,
    'poss': _poss,
    'security': _security,
    'amalgamate': _amalgamate,
    'em': _em,
    'product-game': _product_game,
    'check-axiom': _check_axiom,
    'independence-table': _independence_table,
    'oracle-compare': _oracle_compare,
}


def run_command(command, game_file=None, options: RunOptions = None) -> Report:
    options = options or RunOptions()
    if command not in HANDLERS:
        raise ValueError(f'unknown command {command!r}')
    report = Report(command=command)
    game = None
    if command not in GAMELESS:
        if game_file is None:
            raise DimensionError(f'{command} needs a game file')
        game = game_file.game
        report.game = game_document(game, game_file.name, game_file.description)
    logger.debug(f'Running {command}')
    HANDLERS[command](report, game, options)
    return report
