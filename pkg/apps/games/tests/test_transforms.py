import random
from fractions import Fraction
from pathlib import Path

from django.conf import settings
from django.test import SimpleTestCase, override_settings

from apps.games.catalog import crossed_units_d1, duopoly
from apps.games.exceptions import DimensionError, SizeError
from apps.games.matrices import MultiGameD1, MultiGameD2, ScalarGame
from apps.games.payoffs import PayoffVector, payoff_d1, payoff_d2
from apps.games.serializers import parse_game
from apps.games.strategies import MixedStrategy, StrategyTupleII
from apps.games.transforms import (
    amalgamate,
    as_d1,
    as_d2,
    column_tuples,
    em_construct,
    product_game,
    strategy_marginal,
    strategy_product,
)
from apps.solvers.lp import game_value

from . import factories

SAMPLES = Path(settings.BASE_DIR) / 'samples'


class ClassConversionTests(SimpleTestCase):

    def test_round_trip_with_equal_columns(self):
        game = crossed_units_d1()
        self.assertIsInstance(as_d2(game), MultiGameD2)
        self.assertEqual(as_d1(as_d2(game)), game)

    def test_unequal_columns_have_no_first_class_reading(self):
        with self.assertRaises(DimensionError):
            as_d1(duopoly())


class AmalgamationTests(SimpleTestCase):

    def test_crossed_units(self):
        for alpha in (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)):
            merged = amalgamate([[[1, 0]], [[0, 1]]], weights=[alpha, 1 - alpha])
            self.assertEqual(merged, ScalarGame([[alpha, 1, 0, 1 - alpha]]))
            self.assertEqual(game_value(merged).value, 1)

    def test_matches_the_sample_file(self):
        half = amalgamate(crossed_units_d1(), weights=[Fraction(1, 2), Fraction(1, 2)])
        self.assertEqual(half, parse_game(SAMPLES / 'ex2-amalgam-half.json'))

    def test_single_matrix_is_unchanged(self):
        a = ScalarGame([[1, 2], [3, 4]])
        self.assertEqual(amalgamate([a]), a)

    def test_layout_order(self):
        self.assertEqual(column_tuples((2, 3))[:4], [(0, 0), (0, 1), (0, 2), (1, 0)])

    def test_row_mismatch(self):
        with self.assertRaises(DimensionError):
            amalgamate([[[1, 0]], [[0, 1], [1, 1]]])

    @override_settings(GAME_SIZE_CAP=5)
    def test_size_guard(self):
        with self.assertRaises(SizeError):
            amalgamate(duopoly())


class ConstructionTests(SimpleTestCase):

    def test_em_game_cell_for_cell(self):
        self.assertEqual(em_construct(duopoly()), parse_game(SAMPLES / 'duopoly-em.json'))

    def test_em_first_and_last_criteria(self):
        em = em_construct(duopoly())
        self.assertEqual(em.k, 6)
        self.assertEqual(em.criterion(0), ScalarGame([[0, -2], [1, -1]]))
        self.assertEqual(em.criterion(5), ScalarGame([[-1, '1/2'], [0, 1]]))

    def test_product_game_cell_for_cell(self):
        bar = product_game(duopoly())
        self.assertEqual(bar, parse_game(SAMPLES / 'duopoly-product.json'))
        self.assertEqual(bar.criterion(0).row(0), (0, 0, 0, -1, -1, -1))

    def test_size_guard_argument(self):
        with self.assertRaises(SizeError):
            em_construct(duopoly(), size_cap=4)


class StrategyProductTests(SimpleTestCase):

    def test_product_and_marginal(self):
        y = StrategyTupleII([[Fraction(1, 2), Fraction(1, 2)], [0, Fraction(1, 4), Fraction(3, 4)]])
        y_bar = strategy_product(y)
        self.assertEqual(len(y_bar), 6)
        self.assertEqual(y_bar[2], Fraction(3, 8))
        self.assertEqual(strategy_marginal(y_bar, (2, 3)), y)

    def test_duopoly_product_strategy_keeps_the_payoff(self):
        game = duopoly()
        y = StrategyTupleII([[Fraction(1, 4), Fraction(3, 4)], [Fraction(1, 2), 0, Fraction(1, 2)]])
        y_bar = strategy_product(y)
        eighth = Fraction(1, 8)
        self.assertEqual(y_bar.weights, (eighth, 0, eighth, 3 * eighth, 0, 3 * eighth))
        x = MixedStrategy([Fraction(1, 2), Fraction(1, 2)])
        expected = PayoffVector((Fraction(-1, 4), Fraction(-3, 8)))
        self.assertEqual(payoff_d2(game, x, y), expected)
        self.assertEqual(payoff_d1(product_game(game), x, y_bar), expected)

    def test_marginal_length_mismatch(self):
        with self.assertRaises(DimensionError):
            strategy_marginal(MixedStrategy([1, 0, 0]), (2, 3))

    def test_payoff_preservation(self):
        rng = random.Random(2024)
        for _ in range(200):
            game = factories.d2_game(rng, max_m=3, max_k=3, max_n=4)
            bar = product_game(game)
            x = factories.strategy(rng, game.m)
            y = factories.strategy_tuple(rng, game.n_vec)
            y_bar = factories.strategy(rng, bar.n)
            self.assertEqual(payoff_d2(game, x, y), payoff_d1(bar, x, strategy_product(y)))
            self.assertEqual(payoff_d1(bar, x, y_bar), payoff_d2(game, x, strategy_marginal(y_bar, game.n_vec)))


class ProductGameTests(SimpleTestCase):

    def test_security_levels_of_a_mixed_strategy(self):
        bar = as_d2(product_game(duopoly()))
        x = MixedStrategy([Fraction(1, 2), Fraction(1, 2)])
        levels = PayoffVector(max(x.array @ a.entries) for a in bar.matrices)
        self.assertEqual(levels, PayoffVector((Fraction(1, 2), Fraction(3, 4))))
        self.assertIsInstance(bar, MultiGameD2)
        self.assertIsInstance(product_game(duopoly()), MultiGameD1)
