"""
Instance checks of the consistency axioms A0..A7.

A check runs the axiom's defining predicate on one instance, with one subject
doing the solving: the minimax sweep, the security sweep, the scalar value or
one of the evaluation maps h0/h1/h2. Inclusions (A1, A3, A5) ask every point of
the changed game's set for a partner in the original set, the invariances (A2,
A4) compare the two sets, and the consistency axioms (A6, A7) look for a mixing
weight that carries each point into the game with criteria 1 and 2 merged.

Sweeps only sample their sets, so a check on a sweep subject reports
"inconclusive" rather than "fails" unless the violation can be decided
exactly. Every "fails" report carries a witness that replay_witness can
re-evaluate.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from apps.games import conf
from apps.games.exceptions import DimensionError, WeightError
from apps.games.matrices import MultiGameD1, MultiGameD2, ScalarGame
from apps.games.payoffs import PayoffPoint, PayoffSet, PayoffVector, WeightVector, as_weights
from apps.games.rationals import render, to_rational
from apps.games.transforms import amalgamate, as_d1, as_d2
from apps.solvers.lp import Constraint, LinearProgram, Relation, game_value, solve_lp
from apps.solvers.minimax import MinimaxSweepConfig, vminmax_sweep, vminmax_weighted
from apps.solvers.poss import poss_sweep, poss_weighted, poss_weighted_ties

from .dominance import is_dominated_column, is_dominated_column_tuple, is_dominated_row
from .maps import EVALUATION_MAPS

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class Axiom(str, Enum):
    OBJECTIVITY = 'A0'
    MONOTONICITY = 'A1'
    COLUMN_DOMINANCE = 'A2'
    COLUMN_ELIMINATION = 'A3'
    ROW_DOMINANCE = 'A4'
    ROW_ELIMINATION = 'A5'
    CONSISTENCY = 'A6'
    LINEAR_CONSISTENCY = 'A7'


class Subject(str, Enum):
    VMINMAX = 'v-minmax'
    VPOSS = 'vposs'
    VAL = 'val'
    H0 = 'h0'
    H1 = 'h1'
    H2 = 'h2'

    @property
    def exact(self):
        """Single-criterion subjects compute their one point exactly."""
        return self not in (Subject.VMINMAX, Subject.VPOSS)


class Verdict(str, Enum):
    HOLDS = 'holds'
    FAILS = 'fails'
    INCONCLUSIVE = 'inconclusive'


# changed-game point  <relation>  original-game point
INCLUSION_RELATIONS = {
    Axiom.MONOTONICITY: '<=',
    Axiom.COLUMN_ELIMINATION: '<=',
    Axiom.ROW_ELIMINATION: '>=',
}


@dataclass(frozen=True)
class AxiomInstance:
    """
    One instance of an axiom.

    `line` is the appended column (A2) or row (A4): a bare vector for scalar
    games and for the chosen criterion of a second-class game, one vector
    per criterion otherwise. `criterion` and `index` are 0-based. `alpha`
    pins the mixing weight of A6/A7.
    """

    game: object
    other: object = None
    criterion: int = None
    line: tuple = None
    index: int = None
    alpha: Fraction = None
    description: str = ''


@dataclass(frozen=True)
class AxiomCheckConfig:
    sweep: MinimaxSweepConfig = field(default_factory=MinimaxSweepConfig)
    search_resolutions: tuple = None

    def search_grids(self):
        return tuple(self.search_resolutions or conf.axiom_search_grids())


@dataclass(frozen=True)
class AxiomReport:
    axiom: Axiom
    subject: Subject
    instance: AxiomInstance
    description: str
    verdict: Verdict
    witness: dict
    note: str = ''
    config: AxiomCheckConfig = None

    @property
    def fails(self):
        return self.verdict == Verdict.FAILS


def _scalar(game):
    if isinstance(game, ScalarGame):
        return game
    if isinstance(game, (MultiGameD1, MultiGameD2)) and game.k == 1:
        return game.matrices[0]
    raise DimensionError(f'single-criterion subjects need k = 1, got k = {game.k}')


def subject_game(subject, game):
    """The game in the class the subject is defined on."""
    subject = Subject(subject)
    if subject == Subject.VMINMAX:
        return as_d1(game)
    if subject == Subject.VPOSS:
        return as_d2(game)
    return _scalar(game)


def solve_subject(subject, game, cfg=None) -> PayoffSet:
    subject = Subject(subject)
    cfg = cfg or AxiomCheckConfig()
    game = subject_game(subject, game)
    if subject == Subject.VMINMAX:
        return vminmax_sweep(game, cfg.sweep)
    if subject == Subject.VPOSS:
        return poss_sweep(game, cfg.sweep)
    if subject == Subject.VAL:
        result = game_value(game)
        return PayoffSet([PayoffPoint(PayoffVector([result.value]), strategy=result.x_opt, counter=result.y_opt)])
    return PayoffSet([PayoffVector([EVALUATION_MAPS[subject.value](game)])])


def poss_member(game, payoff, alpha):
    """
    True when payoff is the security payoff of a strategy efficient for alpha.

    The alpha-weighted payoff must be optimal and some x must keep every
    criterion at or below its component; then x attains the payoff exactly.
    """
    game = as_d2(game)
    payoff = PayoffVector(payoff)
    alpha = as_weights(alpha, game.k)
    if payoff.weighted_sum(alpha) != poss_weighted(game, alpha).payoff.weighted_sum(alpha):
        return False
    constraints = [
        Constraint(tuple(a.entries[:, j]), Relation.LE, level)
        for a, level in zip(game.matrices, payoff)
        for j in range(a.n)
    ]
    constraints.append(Constraint((ONE,) * game.m, Relation.EQ, ONE))
    return solve_lp(LinearProgram(objective=(ZERO,) * game.m, constraints=tuple(constraints))).is_optimal


def vminmax_member(game, point: PayoffPoint):
    """
    True when point's row strategy, played against some optimal column
    strategy of the game weighted by point's alpha, yields point's payoff.

    A True answer places the payoff among the optimal-pair payoffs for that
    alpha; False only means this row strategy cannot reach it.
    """
    game = as_d1(game)
    x, alpha = point.strategy, point.alpha
    if x is None or alpha is None or len(x) != game.m:
        return False
    weighted = game.weighted(alpha)
    value = game_value(weighted).value
    if max(x.array @ weighted.entries) != value:
        return False
    constraints = [
        Constraint(tuple(weighted.entries[i, :]), Relation.GE, value) for i in range(game.m)
    ]
    constraints += [
        Constraint(tuple(x.array @ a.entries), Relation.EQ, level)
        for a, level in zip(game.matrices, point.payoff)
    ]
    constraints.append(Constraint((ONE,) * game.n, Relation.EQ, ONE))
    return solve_lp(LinearProgram(objective=(ZERO,) * game.n, constraints=tuple(constraints))).is_optimal


def _is_vector(value):
    return isinstance(value, (list, tuple, np.ndarray))


def _bare(line):
    if line and _is_vector(line[0]):
        if len(line) != 1:
            raise DimensionError(f'expected a single vector, got {len(line)}')
        return line[0]
    return line


def _per_criterion(game, line):
    if isinstance(game, ScalarGame):
        return _bare(line)
    if game.k == 1 and line and not _is_vector(line[0]):
        return (line,)
    return line


def _criterion(game, instance):
    criterion = instance.criterion or 0
    if not 0 <= criterion < game.k:
        raise DimensionError(f'criterion {criterion + 1} outside 1..{game.k}')
    return criterion


def _required(instance, name):
    value = getattr(instance, name)
    if value is None:
        raise DimensionError(f'this axiom needs the instance field {name!r}')
    return value


def _with_dominated_column(game, instance):
    line = _required(instance, 'line')
    if isinstance(game, MultiGameD2):
        criterion = _criterion(game, instance)
        column = _bare(line)
        dominance = is_dominated_column(game.criterion(criterion), column)
        extended = game.with_column(criterion, column)
    else:
        line = _per_criterion(game, line)
        if isinstance(game, MultiGameD1):
            dominance = is_dominated_column_tuple(game, line)
        else:
            dominance = is_dominated_column(game, line)
        extended = game.with_column(line)
    if not dominance:
        raise DimensionError('the new column is not dominated by a convex combination of the columns')
    return extended


def _with_dominated_row(game, instance):
    line = _per_criterion(game, _required(instance, 'line'))
    if not is_dominated_row(game, line, exact=False):
        raise DimensionError('the new row is not dominated by a convex combination of the rows')
    return game.with_row(line)


def _without_column(game, instance):
    index = _required(instance, 'index')
    if isinstance(game, MultiGameD2):
        return game.without_column(_criterion(game, instance), index)
    return game.without_column(index)


def instance_games(axiom, subject, instance):
    """(changed game, original game) for the inclusion and invariance axioms."""
    axiom = Axiom(axiom)
    game = subject_game(subject, instance.game)
    if axiom == Axiom.MONOTONICITY:
        other = subject_game(subject, _required(instance, 'other'))
        if not other <= game:
            raise DimensionError('the second game is not entrywise below the first')
        return other, game
    if axiom == Axiom.COLUMN_DOMINANCE:
        return _with_dominated_column(game, instance), game
    if axiom == Axiom.COLUMN_ELIMINATION:
        return _without_column(game, instance), game
    if axiom == Axiom.ROW_DOMINANCE:
        return _with_dominated_row(game, instance), game
    if axiom == Axiom.ROW_ELIMINATION:
        return game.without_row(_required(instance, 'index')), game
    raise DimensionError(f'{axiom.value} does not compare two games')


def _related(left, right, relation):
    if relation == '<=':
        return all(a <= b for a, b in zip(left, right))
    return all(a >= b for a, b in zip(left, right))


def _render_alpha(alpha):
    return None if alpha is None else alpha.render()


def _objectivity(subject, instance, cfg):
    game = subject_game(subject, instance.game)
    if any(a.shape != (1, 1) for a in game.matrices):
        raise DimensionError('objectivity is stated for games with one row and one column per criterion')
    expected = PayoffVector(a.entry(0, 0) for a in game.matrices)
    returned = solve_subject(subject, game, cfg)
    witness = {
        'kind': 'objectivity',
        'expected': expected.render(),
        'returned': [p.render() for p in returned.values()],
    }
    verdict = Verdict.HOLDS if returned.values() == [expected] else Verdict.FAILS
    return verdict, witness, ''


def _inclusion(axiom, subject, instance, cfg):
    changed, original = instance_games(axiom, subject, instance)
    lhs = solve_subject(subject, changed, cfg)
    rhs = solve_subject(subject, original, cfg)
    relation = INCLUSION_RELATIONS[axiom]

    unmatched, same_weights = [], 0
    for point in lhs:
        partners = [q for q in rhs if _related(point.payoff, q.payoff, relation)]
        if not partners:
            unmatched.append(point)
        elif point.alpha is not None and any(q.alpha == point.alpha for q in partners):
            same_weights += 1
    if not unmatched:
        return Verdict.HOLDS, {'points': len(lhs), 'same_weights': same_weights}, ''

    point = unmatched[0]
    witness = {
        'kind': 'missing-partner',
        'point': point.payoff.render(),
        'relation': relation,
        'reference': [q.render() for q in rhs.values()],
        'alpha': _render_alpha(point.alpha),
    }
    if subject.exact:
        return Verdict.FAILS, witness, ''
    return (
        Verdict.INCONCLUSIVE,
        witness,
        f'{len(unmatched)} swept point(s) without a partner in the swept reference set',
    )


def _invariance(axiom, subject, instance, cfg):
    changed, original = instance_games(axiom, subject, instance)
    extended = solve_subject(subject, changed, cfg)
    base = solve_subject(subject, original, cfg)
    if extended == base:
        return Verdict.HOLDS, {'points': len(base)}, ''

    differences = [(p, 'extended', original) for p in extended if p.payoff not in base]
    differences += [(p, 'original', changed) for p in base if p.payoff not in extended]

    def witness_for(point, found_in):
        return {
            'kind': 'set-difference',
            'point': point.payoff.render(),
            'found_in': found_in,
            'alpha': _render_alpha(point.alpha),
        }

    if subject.exact:
        point, found_in, _ = differences[0]
        return Verdict.FAILS, witness_for(point, found_in), ''
    if subject == Subject.VPOSS:
        for point, found_in, other in differences:
            if point.alpha is not None and not poss_member(other, point.payoff, point.alpha):
                return Verdict.FAILS, witness_for(point, found_in), ''
    if subject == Subject.VMINMAX and all(vminmax_member(other, point) for point, _, other in differences):
        return Verdict.HOLDS, {
            'points': len(base),
            'reached_in_the_other_game': [point.payoff.render() for point, _, _ in differences],
        }, ''
    point, found_in, _ = differences[0]
    return (
        Verdict.INCONCLUSIVE,
        witness_for(point, found_in),
        'the swept sets differ only by points the weight grid reached in one game',
    )


def reduced_game(subject, game, share, linear):
    """
    Criteria 1 and 2 merged with weights (share, 1 - share).

    linear=True adds the two matrices (equal column counts); otherwise they
    are amalgamated over column pairs.
    """
    first, second, *rest = game.matrices
    if linear:
        head = first.scaled(share) + second.scaled(ONE - share)
    else:
        head = amalgamate([first, second], weights=[share, ONE - share])
    cls = MultiGameD1 if Subject(subject) == Subject.VMINMAX else MultiGameD2
    return cls([head, *rest])


def collapse_point(payoff, share):
    z1, z2, *rest = payoff
    return PayoffVector([share * z1 + (ONE - share) * z2, *rest])


def gap_pieces(game, payoff, linear):
    """
    Single-row games with two criteria: val(reduced(s)) minus the collapsed
    point is max over columns of (1 - s) u + s w; returns the (u, w) pairs.
    """
    first, second = game.matrices[0].row(0), game.matrices[1].row(0)
    z1, z2 = payoff[0], payoff[1]
    pairs = zip(first, second) if linear else product(first, second)
    return [(q - z2, p - z1) for p, q in pairs]


def gap(pieces, share):
    return max((ONE - share) * u + share * w for u, w in pieces)


def gap_breakpoints(pieces):
    shares = {ZERO, ONE}
    for (u1, w1), (u2, w2) in combinations(pieces, 2):
        slope = (w1 - u1) - (w2 - u2)
        if slope:
            share = (u2 - u1) / slope
            if ZERO < share < ONE:
                shares.add(share)
    return sorted(shares)


def first_root(pieces):
    """Smallest share in the open interval (0, 1) where the gap vanishes, or None."""
    shares = gap_breakpoints(pieces)
    values = [gap(pieces, s) for s in shares]
    for s_a, s_b, d_a, d_b in zip(shares, shares[1:], values, values[1:]):
        if d_a == 0 and s_a > 0:
            return s_a
        if d_a == 0 and d_b == 0:
            return (s_a + s_b) / 2
        if d_a * d_b < 0:
            return s_a + (s_b - s_a) * d_a / (d_a - d_b)
    return None


def _annotation_share(alpha):
    total = alpha[0] + alpha[1]
    return alpha[0] / total, WeightVector([total, *alpha[2:]])


def _grid_shares(grids):
    seen = set()
    for resolution in grids:
        for i in range(1, resolution):
            share = Fraction(i, resolution)
            if share not in seen:
                seen.add(share)
                yield share


class MixingWeightSearch:
    """Finds a share under which a point survives the merge of criteria 1 and 2."""

    def __init__(self, subject, game, linear, cfg):
        self.subject = Subject(subject)
        self.game = game
        self.linear = linear
        self.cfg = cfg
        self._swept = {}

    def reduced(self, share):
        return reduced_game(self.subject, self.game, share, self.linear)

    def swept(self, share):
        if share not in self._swept:
            self._swept[share] = solve_subject(self.subject, self.reduced(share), self.cfg)
        return self._swept[share]

    def weighted(self, share, beta):
        reduced = self.reduced(share)
        if self.subject == Subject.VMINMAX:
            return vminmax_weighted(reduced, beta, self.cfg.sweep)
        ties = poss_weighted_ties(reduced, beta, cap=self.cfg.sweep.cap())
        return PayoffSet(result.as_point() for result in ties)

    def find(self, point, pinned=None):
        if pinned is not None:
            return pinned if collapse_point(point.payoff, pinned) in self.swept(pinned) else None
        if point.alpha is not None:
            share, beta = _annotation_share(point.alpha)
            if collapse_point(point.payoff, share) in self.weighted(share, beta):
                return share
        if self.game.m == 1 and self.game.k == 2:
            return first_root(gap_pieces(self.game, point.payoff, self.linear))
        for share in _grid_shares(self.cfg.search_grids()):
            if collapse_point(point.payoff, share) in self.swept(share):
                return share
        return None


def _pinned_share(instance):
    if instance.alpha is None:
        return None
    share = to_rational(instance.alpha)
    if not ZERO < share < ONE:
        raise WeightError(f'the mixing weight must lie strictly between 0 and 1, got {render(share)}')
    return share


def _consistency(axiom, subject, instance, cfg):
    linear = axiom == Axiom.LINEAR_CONSISTENCY
    if subject.exact:
        raise DimensionError(f'{axiom.value} merges two criteria; {subject.value} has only one')
    game = subject_game(subject, instance.game)
    if game.k < 2:
        raise DimensionError(f'{axiom.value} needs at least two criteria')
    if linear and len(set(game.n_vec)) != 1:
        raise DimensionError(f'{axiom.value} adds A(1) and A(2); column counts {game.n_vec} differ')
    if not linear and subject == Subject.VMINMAX and game.k != 2:
        raise DimensionError('amalgamating two criteria leaves a first-class game only when k = 2')
    pinned = _pinned_share(instance)

    search = MixingWeightSearch(subject, game, linear, cfg)
    found, missing = [], []
    for point in solve_subject(subject, game, cfg):
        share = search.find(point, pinned)
        if share is None:
            missing.append(point)
        else:
            found.append({'point': point.payoff.render(), 'share': render(share)})
    if not missing:
        return Verdict.HOLDS, {'mixing_weights': found}, ''

    point = missing[0]
    if pinned is not None and game.k == 2:
        return Verdict.FAILS, {
            'kind': 'pinned-mixing-weight',
            'point': point.payoff.render(),
            'share': render(pinned),
            'collapsed': collapse_point(point.payoff, pinned).render(),
            'reduced': [p.render() for p in search.swept(pinned).values()],
        }, ''
    if pinned is None and game.m == 1 and game.k == 2:
        pieces = gap_pieces(game, point.payoff, linear)
        return Verdict.FAILS, {
            'kind': 'no-mixing-weight',
            'point': point.payoff.render(),
            'gaps': [[render(s), render(gap(pieces, s))] for s in gap_breakpoints(pieces)],
        }, ''
    return Verdict.INCONCLUSIVE, {
        'kind': 'unresolved',
        'points': [p.payoff.render() for p in missing],
        'grids': list(cfg.search_grids()),
    }, 'no searched mixing weight reproduced these points'


def _describe(axiom, subject, instance):
    game = instance.game
    return f'{axiom.value} for {subject.value} on a {game.game_class} game with m={game.m}, k={game.k}'


def check_axiom(axiom, subject, instance, cfg=None) -> AxiomReport:
    axiom, subject = Axiom(axiom), Subject(subject)
    cfg = cfg or AxiomCheckConfig()
    if not isinstance(instance, AxiomInstance):
        instance = AxiomInstance(game=instance)

    if axiom == Axiom.OBJECTIVITY:
        verdict, witness, note = _objectivity(subject, instance, cfg)
    elif axiom in INCLUSION_RELATIONS:
        verdict, witness, note = _inclusion(axiom, subject, instance, cfg)
    elif axiom in (Axiom.COLUMN_DOMINANCE, Axiom.ROW_DOMINANCE):
        verdict, witness, note = _invariance(axiom, subject, instance, cfg)
    else:
        verdict, witness, note = _consistency(axiom, subject, instance, cfg)

    logger.info(f'{axiom.value} for {subject.value}: {verdict.value}')
    return AxiomReport(
        axiom=axiom,
        subject=subject,
        instance=instance,
        description=instance.description or _describe(axiom, subject, instance),
        verdict=verdict,
        witness=witness,
        note=note,
        config=cfg,
    )


def replay_witness(report: AxiomReport) -> bool:
    """Re-evaluate a fails report's witness; True when the violation reproduces."""
    if report.verdict != Verdict.FAILS:
        return False
    witness, cfg = report.witness, report.config
    axiom, subject, instance = report.axiom, report.subject, report.instance
    kind = witness['kind']
    linear = axiom == Axiom.LINEAR_CONSISTENCY

    if kind == 'objectivity':
        returned = solve_subject(subject, instance.game, cfg)
        return returned.values() != [PayoffVector(witness['expected'])]

    point = PayoffVector(witness['point'])
    if kind == 'missing-partner':
        changed, original = instance_games(axiom, subject, instance)
        if point not in solve_subject(subject, changed, cfg):
            return False
        reference = solve_subject(subject, original, cfg).values()
        return not any(_related(point, q, witness['relation']) for q in reference)

    if kind == 'set-difference':
        changed, original = instance_games(axiom, subject, instance)
        games = {'extended': changed, 'original': original}
        found_in = witness['found_in']
        other = games['original' if found_in == 'extended' else 'extended']
        if point not in solve_subject(subject, games[found_in], cfg):
            return False
        if subject.exact:
            return point not in solve_subject(subject, other, cfg)
        return not poss_member(other, point, witness['alpha'])

    game = subject_game(subject, instance.game)
    if point not in solve_subject(subject, game, cfg):
        return False
    if kind == 'pinned-mixing-weight':
        share = to_rational(witness['share'])
        reduced = solve_subject(subject, reduced_game(subject, game, share, linear), cfg)
        return collapse_point(point, share) not in reduced
    if kind == 'no-mixing-weight':
        return first_root(gap_pieces(game, point, linear)) is None
    return False
