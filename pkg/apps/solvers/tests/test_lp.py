import random
from fractions import Fraction

from django.test import SimpleTestCase

from apps.games.exceptions import DimensionError
from apps.games.matrices import ScalarGame
from apps.games.tests import factories
from apps.solvers.lp import (
    Constraint,
    LinearProgram,
    Player,
    Relation,
    Sense,
    Status,
    game_value,
    optimal_strategy_vertices,
    optimal_vertices,
    solve_lp,
)

HALF = Fraction(1, 2)


class SolveLPTests(SimpleTestCase):

    def test_textbook_maximum_with_duals(self):
        lp = LinearProgram(
            objective=(3, 5),
            sense=Sense.MAX,
            constraints=(
                ((1, 0), '<=', 4),
                ((0, 2), '<=', 12),
                ((3, 2), '<=', 18),
            ),
        )
        solution = solve_lp(lp)
        self.assertTrue(solution.is_optimal)
        self.assertEqual(solution.values, (2, 6))
        self.assertEqual(solution.objective, 36)
        self.assertEqual(solution.duals, (0, Fraction(3, 2), 1))

    def test_infeasible(self):
        lp = LinearProgram(objective=(1,), constraints=(((1,), '>=', 2), ((1,), '<=', 1)))
        self.assertEqual(solve_lp(lp).status, Status.INFEASIBLE)

    def test_unbounded(self):
        lp = LinearProgram(objective=(1, 0), sense=Sense.MAX, constraints=(((1, -1), '<=', 1),))
        solution = solve_lp(lp)
        self.assertEqual(solution.status, Status.UNBOUNDED)
        self.assertIsNone(solution.values)

    def test_free_and_boxed_variables(self):
        free = LinearProgram(objective=(1,), constraints=(((1,), '>=', -3),), bounds=((None, None),))
        self.assertEqual(solve_lp(free).values, (-3,))
        boxed = LinearProgram(objective=(-1,), bounds=((0, 3),))
        self.assertEqual(solve_lp(boxed).objective, -3)
        shifted = LinearProgram(objective=(1,), bounds=((-2, 5),))
        self.assertEqual(solve_lp(shifted).values, (-2,))

    def test_equality_with_negative_right_hand_side(self):
        lp = LinearProgram(objective=(1, 1), constraints=(Constraint((-1, -1), Relation.EQ, -2),))
        self.assertEqual(solve_lp(lp).objective, 2)

    def test_constraint_width_mismatch(self):
        with self.assertRaises(DimensionError):
            LinearProgram(objective=(1, 1), constraints=(((1,), '<=', 1),))

    def test_optimal_face_vertices(self):
        lp = LinearProgram(objective=(1, 1), sense=Sense.MAX, constraints=(((1, 1), '<=', 1),))
        self.assertEqual(set(optimal_vertices(lp)), {(1, 0), (0, 1)})

    def test_vertex_cap(self):
        lp = LinearProgram(objective=(1, 1), sense=Sense.MAX, constraints=(((1, 1), '<=', 1),))
        self.assertEqual(len(optimal_vertices(lp, cap=1)), 1)

    def test_no_vertices_when_infeasible(self):
        lp = LinearProgram(objective=(1,), constraints=(((1,), '>=', 2), ((1,), '<=', 1)))
        self.assertEqual(optimal_vertices(lp), [])


class GameValueTests(SimpleTestCase):

    def test_matching_pennies(self):
        result = game_value(ScalarGame([[1, -1], [-1, 1]]))
        self.assertEqual(result.value, 0)
        self.assertEqual(result.x_opt.weights, (HALF, HALF))
        self.assertEqual(result.y_opt.weights, (HALF, HALF))

    def test_rows_minimize(self):
        result = game_value(ScalarGame([[3, 5], [2, 7]]))
        self.assertEqual(result.value, 5)
        self.assertEqual(result.x_opt.weights, (1, 0))
        self.assertEqual(result.y_opt.weights, (0, 1))

    def test_amalgamated_crossed_units(self):
        self.assertEqual(game_value([[HALF, 1, 0, HALF]]).value, 1)

    def test_tied_column_strategies(self):
        result = game_value(ScalarGame([[1, 1]]), vertices=True)
        self.assertEqual(result.value, 1)
        self.assertEqual({y.weights for y in result.y_vertices}, {(1, 0), (0, 1)})
        self.assertEqual([x.weights for x in result.x_vertices], [(1,)])

    def test_tied_row_strategies(self):
        strategies = optimal_strategy_vertices(ScalarGame([[2], [2], [5]]), Player.I)
        self.assertEqual({x.weights for x in strategies}, {(1, 0, 0), (0, 1, 0)})

    def test_random_games_are_saddle_points(self):
        rng = random.Random(7)
        for _ in range(50):
            game = factories.scalar_game(rng)
            result = game_value(game)
            with self.subTest(game=repr(game)):
                self.assertEqual(max(result.x_opt.array @ game.entries), result.value)
                self.assertEqual(min(game.entries @ result.y_opt.array), result.value)

    def test_transposed_negated_game_has_the_opposite_value(self):
        rng = random.Random(31)
        for _ in range(40):
            game = factories.scalar_game(rng)
            with self.subTest(game=repr(game)):
                self.assertEqual(game_value(game.transposed().negated()).value, -game_value(game).value)

    def test_shift_moves_the_value(self):
        rng = random.Random(32)
        for _ in range(40):
            game = factories.scalar_game(rng)
            constant = factories.rational(rng)
            with self.subTest(game=repr(game), constant=constant):
                self.assertEqual(game_value(game.shifted(constant)).value, game_value(game).value + constant)


def _corner_optimum(objective, rows, sense):
    """Best objective over the feasible pairwise intersections of the boundary lines of a plane LP."""
    lines = [(a, b, rhs) for (a, b), rhs in rows] + [(1, 0, 0), (0, 1, 0)]
    best = None
    for i, (a1, b1, r1) in enumerate(lines):
        for a2, b2, r2 in lines[i + 1:]:
            det = a1 * b2 - a2 * b1
            if det == 0:
                continue
            x = Fraction(r1 * b2 - r2 * b1, det)
            y = Fraction(a1 * r2 - a2 * r1, det)
            if x < 0 or y < 0 or any(a * x + b * y > rhs for (a, b), rhs in rows):
                continue
            value = objective[0] * x + objective[1] * y
            if best is None or (value > best if sense == Sense.MAX else value < best):
                best = value
    return best


class VertexEnumerationTests(SimpleTestCase):
    """Bounded plane LPs against the best feasible corner."""

    def test_random_plane_programs(self):
        rng = random.Random(33)
        for _ in range(60):
            rows = [
                ((rng.randint(1, 5), rng.randint(0, 5)), rng.randint(1, 10)),
                ((rng.randint(0, 5), rng.randint(1, 5)), rng.randint(1, 10)),
            ]
            rows += [((rng.randint(0, 5), rng.randint(0, 5)), rng.randint(1, 10)) for _ in range(rng.randint(0, 2))]
            objective = (rng.randint(-3, 5), rng.randint(-3, 5))
            sense = rng.choice((Sense.MIN, Sense.MAX))
            lp = LinearProgram(
                objective=objective,
                sense=sense,
                constraints=tuple((coeffs, '<=', rhs) for coeffs, rhs in rows),
            )
            solution = solve_lp(lp)
            with self.subTest(rows=rows, objective=objective, sense=sense):
                self.assertTrue(solution.is_optimal)
                self.assertEqual(solution.objective, _corner_optimum(objective, rows, sense))
                x, y = solution.values
                self.assertTrue(all(a * x + b * y <= rhs for (a, b), rhs in rows))
