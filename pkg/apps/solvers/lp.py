"""
Exact linear programming over Fractions and the value of a scalar matrix game.

The solver is a two-phase tableau simplex with Bland's rule. Every row gets an
artificial column; after phase one those columns stay in the tableau (they may
not re-enter), so at the optimum they hold the basis inverse and their reduced
costs give the dual solution.
"""
import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from apps.games import conf
from apps.games.exceptions import DimensionError, SolverError
from apps.games.matrices import ScalarGame
from apps.games.rationals import render, to_rational
from apps.games.strategies import MixedStrategy

logger = logging.getLogger(__name__)

ZERO = Fraction(0)
ONE = Fraction(1)


class Relation(str, Enum):
    LE = '<='
    EQ = '='
    GE = '>='


class Sense(str, Enum):
    MIN = 'min'
    MAX = 'max'


class Status(str, Enum):
    OPTIMAL = 'optimal'
    INFEASIBLE = 'infeasible'
    UNBOUNDED = 'unbounded'


class Player(str, Enum):
    I = 'I'  # noqa: E741
    II = 'II'


@dataclass(frozen=True)
class Constraint:
    coefficients: tuple
    relation: Relation
    rhs: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'coefficients', tuple(to_rational(c) for c in self.coefficients))
        object.__setattr__(self, 'relation', Relation(self.relation))
        object.__setattr__(self, 'rhs', to_rational(self.rhs))


@dataclass(frozen=True)
class LinearProgram:
    """
    objective . x -> min/max subject to the constraints and per-variable bounds.

    bounds holds one (lower, upper) pair per variable, None meaning unbounded
    on that side; by default every variable is nonnegative.
    """

    objective: tuple
    sense: Sense = Sense.MIN
    constraints: tuple = ()
    bounds: tuple = None

    def __post_init__(self):
        objective = tuple(to_rational(c) for c in self.objective)
        if not objective:
            raise DimensionError('a linear program needs at least one variable')
        constraints = tuple(
            c if isinstance(c, Constraint) else Constraint(*c) for c in self.constraints
        )
        for index, constraint in enumerate(constraints, start=1):
            if len(constraint.coefficients) != len(objective):
                raise DimensionError(
                    f'constraint {index} has {len(constraint.coefficients)} coefficients '
                    f'for {len(objective)} variables'
                )
        if self.bounds is None:
            bounds = ((ZERO, None),) * len(objective)
        else:
            bounds = tuple(
                (None if lo is None else to_rational(lo), None if hi is None else to_rational(hi))
                for lo, hi in self.bounds
            )
            if len(bounds) != len(objective):
                raise DimensionError(f'{len(bounds)} bounds for {len(objective)} variables')
        object.__setattr__(self, 'objective', objective)
        object.__setattr__(self, 'sense', Sense(self.sense))
        object.__setattr__(self, 'constraints', constraints)
        object.__setattr__(self, 'bounds', bounds)

    @property
    def num_variables(self):
        return len(self.objective)


@dataclass(frozen=True)
class LPSolution:
    """
    Outcome of solve_lp.

    For an optimal program `duals` has one multiplier per constraint, signed
    so that the Lagrangian reads objective - sum(duals_i * (row_i . x - rhs_i)).
    """

    status: Status
    values: tuple = None
    objective: Fraction = None
    duals: tuple = None

    @property
    def is_optimal(self):
        return self.status == Status.OPTIMAL


class _StandardForm:
    """min cost . z  s.t.  T z = b, z >= 0, with b >= 0 and an artificial column per row."""

    def __init__(self, lp):
        self.lp = lp
        self.expressions = []
        bound_rows = []
        columns = 0
        for lo, hi in lp.bounds:
            if lo is not None:
                self.expressions.append((lo, ((columns, 1),)))
                if hi is not None:
                    bound_rows.append((columns, hi - lo))
                columns += 1
            elif hi is not None:
                self.expressions.append((hi, ((columns, -1),)))
                columns += 1
            else:
                # free variable: z+ - z-
                self.expressions.append((ZERO, ((columns, 1), (columns + 1, -1))))
                columns += 2

        rows = []
        for constraint in lp.constraints:
            coefficients = [ZERO] * columns
            rhs = constraint.rhs
            for a, (offset, terms) in zip(constraint.coefficients, self.expressions):
                if a == 0:
                    continue
                rhs -= a * offset
                for column, sign in terms:
                    coefficients[column] += a * sign
            rows.append((coefficients, constraint.relation, rhs))
        for column, width in bound_rows:
            coefficients = [ZERO] * columns
            coefficients[column] = ONE
            rows.append((coefficients, Relation.LE, width))

        self.num_rows = len(rows)
        self.num_constraints = len(lp.constraints)
        self.slack_start = columns
        self.artificial_start = columns + sum(1 for row in rows if row[1] != Relation.EQ)
        self.width = self.artificial_start + self.num_rows

        tableau = np.full((self.num_rows, self.width + 1), ZERO, dtype=object)
        self.row_signs = []
        slack = self.slack_start
        for i, (coefficients, relation, rhs) in enumerate(rows):
            tableau[i, :columns] = coefficients
            if relation == Relation.LE:
                tableau[i, slack] = ONE
                slack += 1
            elif relation == Relation.GE:
                tableau[i, slack] = -ONE
                slack += 1
            tableau[i, -1] = rhs
            sign = 1
            if rhs < 0:
                tableau[i, :] = -tableau[i, :]
                sign = -1
            self.row_signs.append(sign)
            tableau[i, self.artificial_start + i] = ONE
        self.tableau = tableau

        self.sense_sign = 1 if lp.sense == Sense.MIN else -1
        cost = np.full(self.width, ZERO, dtype=object)
        for c, (offset, terms) in zip(lp.objective, self.expressions):
            for column, sign in terms:
                cost[column] += self.sense_sign * c * sign
        self.cost = cost

    @property
    def regular_columns(self):
        return range(self.artificial_start)

    def original_values(self, z):
        return tuple(
            offset + sum((sign * z[column] for column, sign in terms), ZERO)
            for offset, terms in self.expressions
        )


class _Tableau:
    def __init__(self, form):
        self.form = form
        self.T = form.tableau.copy()
        self.basis = [form.artificial_start + i for i in range(form.num_rows)]
        self.obj = None
        self.pivots = 0

    def copy(self):
        clone = _Tableau.__new__(_Tableau)
        clone.form = self.form
        clone.T = self.T.copy()
        clone.basis = list(self.basis)
        clone.obj = self.obj.copy()
        clone.pivots = self.pivots
        return clone

    def price(self, cost):
        obj = np.full(self.T.shape[1], ZERO, dtype=object)
        obj[:-1] = cost
        for i, column in enumerate(self.basis):
            if cost[column] != 0:
                obj = obj - cost[column] * self.T[i]
        self.obj = obj

    @property
    def value(self):
        return -self.obj[-1]

    def pivot(self, row, column):
        T = self.T
        T[row] = T[row] / T[row, column]
        for i in range(T.shape[0]):
            if i != row and T[i, column] != 0:
                T[i] = T[i] - T[i, column] * T[row]
        if self.obj[column] != 0:
            self.obj = self.obj - self.obj[column] * T[row]
        self.basis[row] = column
        self.pivots += 1

    def ratio_rows(self, column):
        """Rows attaining the minimum ratio test for an entering column."""
        best, rows = None, []
        for i in range(self.T.shape[0]):
            a = self.T[i, column]
            if a > 0:
                ratio = self.T[i, -1] / a
                if best is None or ratio < best:
                    best, rows = ratio, [i]
                elif ratio == best:
                    rows.append(i)
        return rows

    def run(self, allowed):
        """Bland's rule: lowest-index improving column, lowest-index leaving variable on ties."""
        while True:
            column = next((j for j in allowed if self.obj[j] < 0), None)
            if column is None:
                return Status.OPTIMAL
            rows = self.ratio_rows(column)
            if not rows:
                return Status.UNBOUNDED
            row = min(rows, key=lambda i: self.basis[i])
            self.pivot(row, column)

    def drive_out_artificials(self):
        start = self.form.artificial_start
        for i, column in enumerate(self.basis):
            if column < start:
                continue
            for j in range(start):
                if self.T[i, j] != 0:
                    self.pivot(i, j)
                    break
            else:
                logger.debug(f'Row {i} is redundant; its artificial stays basic at zero')

    def point(self):
        z = [ZERO] * self.form.width
        for i, column in enumerate(self.basis):
            z[column] = self.T[i, -1]
        return z


def _optimize(lp):
    form = _StandardForm(lp)
    tableau = _Tableau(form)
    allowed = list(form.regular_columns)

    phase_one = np.full(form.width, ZERO, dtype=object)
    phase_one[form.artificial_start:] = ONE
    tableau.price(phase_one)
    tableau.run(allowed)
    if tableau.value > 0:
        logger.debug(f'Phase one ended with infeasibility {render(tableau.value)}')
        return form, tableau, Status.INFEASIBLE
    tableau.drive_out_artificials()

    tableau.price(form.cost)
    status = tableau.run(allowed)
    logger.debug(f'Simplex finished: {status.value} after {tableau.pivots} pivots')
    return form, tableau, status


def _duals(form, tableau):
    """Dual multipliers of the sign-normalized rows, checked for a zero duality gap."""
    start = form.artificial_start
    y = [-tableau.obj[start + i] for i in range(form.num_rows)]
    dual_objective = sum((y_i * b_i for y_i, b_i in zip(y, form.tableau[:, -1])), ZERO)
    if dual_objective != tableau.value:
        raise SolverError(
            f'duality gap {render(tableau.value - dual_objective)} at an optimal basis'
        )
    return y


def solve_lp(lp: LinearProgram) -> LPSolution:
    """Solve a linear program exactly; returns an optimal vertex with its duals, or the failure status."""
    form, tableau, status = _optimize(lp)
    if status != Status.OPTIMAL:
        return LPSolution(status=status)

    values = form.original_values(tableau.point())
    objective = sum((c * v for c, v in zip(lp.objective, values)), ZERO)
    y = _duals(form, tableau)
    duals = tuple(
        form.sense_sign * sign * y_i
        for sign, y_i in zip(form.row_signs[:form.num_constraints], y[:form.num_constraints])
    )
    return LPSolution(status=Status.OPTIMAL, values=values, objective=objective, duals=duals)


def optimal_vertices(lp: LinearProgram, cap=None, pivot_limit=None):
    """
    All vertices of the optimal face, up to `cap` of them.

    Columns with positive reduced cost are fixed at zero; the remaining
    system is walked basis to basis with ratio-test pivots, so degenerate
    vertices are passed through rather than skipped.
    """
    cap = conf.tie_cap() if cap is None else cap
    pivot_limit = conf.tie_pivot_limit() if pivot_limit is None else pivot_limit
    form, tableau, status = _optimize(lp)
    if status != Status.OPTIMAL:
        return []

    free_columns = [j for j in form.regular_columns if tableau.obj[j] == 0]
    vertices, found = [], set()
    seen = {frozenset(tableau.basis)}
    queue = deque([tableau])
    while queue:
        if len(vertices) >= cap or len(seen) > pivot_limit:
            logger.warning(
                f'Optimal face enumeration stopped at {len(vertices)} vertices '
                f'after {len(seen)} bases (cap {cap}, limit {pivot_limit})'
            )
            break
        current = queue.popleft()
        values = form.original_values(current.point())
        if values not in found:
            found.add(values)
            vertices.append(values)
        for column in free_columns:
            if column in current.basis:
                continue
            for row in current.ratio_rows(column):
                basis = list(current.basis)
                basis[row] = column
                key = frozenset(basis)
                if key in seen:
                    continue
                seen.add(key)
                neighbour = current.copy()
                neighbour.pivot(row, column)
                queue.append(neighbour)
    return vertices


@dataclass(frozen=True)
class GameValueResult:
    value: Fraction
    x_opt: MixedStrategy
    y_opt: MixedStrategy
    x_vertices: tuple = None
    y_vertices: tuple = None


def player_one_program(game: ScalarGame):
    """min v  s.t.  x^T A <= v 1, x in the simplex; variables (x_1..x_m, v)."""
    m, n = game.shape
    constraints = [
        Constraint(tuple(game.entries[:, j]) + (-ONE,), Relation.LE, ZERO) for j in range(n)
    ]
    constraints.append(Constraint((ONE,) * m + (ZERO,), Relation.EQ, ONE))
    return LinearProgram(
        objective=(ZERO,) * m + (ONE,),
        sense=Sense.MIN,
        constraints=tuple(constraints),
        bounds=((ZERO, None),) * m + ((None, None),),
    )


def player_two_program(game: ScalarGame):
    """max w  s.t.  A y >= w 1, y in the simplex; variables (y_1..y_n, w)."""
    m, n = game.shape
    constraints = [
        Constraint(tuple(-a for a in game.entries[i, :]) + (ONE,), Relation.LE, ZERO)
        for i in range(m)
    ]
    constraints.append(Constraint((ONE,) * n + (ZERO,), Relation.EQ, ONE))
    return LinearProgram(
        objective=(ZERO,) * n + (ONE,),
        sense=Sense.MAX,
        constraints=tuple(constraints),
        bounds=((ZERO, None),) * n + ((None, None),),
    )


def _check_saddle(game, value, x, y):
    row_payoffs = x.array @ game.entries
    column_payoffs = game.entries @ y.array
    if max(row_payoffs) != value or min(column_payoffs) != value:
        raise SolverError(
            f'strong duality failed: min-max {render(max(row_payoffs))}, '
            f'max-min {render(min(column_payoffs))}, LP value {render(value)}'
        )


def game_value(game: ScalarGame, vertices=False, cap=None) -> GameValueResult:
    """
    Value and optimal strategies of a scalar game (rows minimize, columns maximize).

    Player II's strategy is read from the duals of player I's program. With
    vertices=True the full vertex sets of both optimal strategy polytopes are
    attached as well.
    """
    if not isinstance(game, ScalarGame):
        game = ScalarGame(game)
    m, n = game.shape
    solution = solve_lp(player_one_program(game))
    if not solution.is_optimal:
        raise SolverError(f'the game program came back {solution.status.value}')
    value = solution.values[-1]
    x_opt = MixedStrategy(solution.values[:m])
    y_opt = MixedStrategy([-d for d in solution.duals[:n]])
    _check_saddle(game, value, x_opt, y_opt)

    x_vertices = y_vertices = None
    if vertices:
        x_vertices = tuple(optimal_strategy_vertices(game, Player.I, cap=cap))
        y_vertices = tuple(optimal_strategy_vertices(game, Player.II, cap=cap))
    return GameValueResult(value, x_opt, y_opt, x_vertices, y_vertices)


def optimal_strategy_vertices(game: ScalarGame, side, cap=None):
    """Vertices of one player's optimal strategy polytope."""
    side = Player(side)
    if side == Player.I:
        program, size = player_one_program(game), game.m
    else:
        program, size = player_two_program(game), game.n
    strategies = []
    for values in optimal_vertices(program, cap=cap):
        strategy = MixedStrategy(values[:size])
        if strategy not in strategies:
            strategies.append(strategy)
    return strategies
