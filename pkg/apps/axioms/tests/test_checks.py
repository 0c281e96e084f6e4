import random
from fractions import Fraction

from django.test import SimpleTestCase

from apps.axioms.checks import (
    Axiom,
    AxiomCheckConfig,
    AxiomInstance,
    Verdict,
    check_axiom,
    collapse_point,
    first_root,
    gap_pieces,
    poss_member,
    replay_witness,
)
from apps.axioms.table import EXTERNAL, independence_table
from apps.games.catalog import crossed_units_d1, crossed_units_d2, duopoly, independence_matrix
from apps.games.exceptions import DimensionError, WeightError
from apps.games.matrices import MultiGameD1, MultiGameD2, ScalarGame
from apps.games.payoffs import PayoffVector
from apps.games.tests import factories
from apps.solvers.minimax import MinimaxSweepConfig

HALF = Fraction(1, 2)

SWEEP_16 = AxiomCheckConfig(sweep=MinimaxSweepConfig(weight_grid_resolution=16))


class CounterexampleTests(SimpleTestCase):

    def test_minimax_consistency_fails_on_crossed_units(self):
        report = check_axiom(Axiom.CONSISTENCY, 'v-minmax', crossed_units_d1())
        self.assertEqual(report.verdict, Verdict.FAILS)
        self.assertEqual(report.witness['kind'], 'no-mixing-weight')
        self.assertTrue(replay_witness(report))

    def test_linear_consistency_fails_for_pinned_weights(self):
        for share in (Fraction(5, 8), Fraction(3, 4), Fraction(7, 8)):
            with self.subTest(share=share):
                report = check_axiom('A7', 'vposs', AxiomInstance(crossed_units_d2(), alpha=share))
                self.assertEqual(report.verdict, Verdict.FAILS)
                self.assertEqual(report.witness['kind'], 'pinned-mixing-weight')
                self.assertEqual(report.witness['reduced'], [[str(share)]])
                self.assertTrue(replay_witness(report))

    def test_linear_consistency_fails_for_every_weight(self):
        report = check_axiom('A7', 'vposs', crossed_units_d2())
        self.assertEqual(report.verdict, Verdict.FAILS)
        self.assertEqual(report.witness['kind'], 'no-mixing-weight')
        self.assertTrue(replay_witness(report))

    def test_holding_reports_do_not_replay(self):
        report = check_axiom('A6', 'vposs', duopoly())
        self.assertFalse(replay_witness(report))


class AnalyticWitnessTests(SimpleTestCase):

    def test_collapse(self):
        self.assertEqual(collapse_point((1, 0, 5), Fraction(1, 4)), PayoffVector((Fraction(1, 4), 5)))

    def test_no_root_for_the_crossed_units(self):
        for point in ((1, 0), (0, 1)):
            self.assertIsNone(first_root(gap_pieces(crossed_units_d1(), point, linear=False)))

    def test_root_inside_the_interval(self):
        # val(sA(1) + (1 - s)A(2)) = max(s, 1 - s) meets the collapsed (1/2, 1/2) at s = 1/2
        game = MultiGameD1([[[1, 0]], [[0, 1]]])
        self.assertEqual(first_root(gap_pieces(game, (HALF, HALF), linear=True)), HALF)


class ObjectivityTests(SimpleTestCase):

    def test_single_cell_games(self):
        game = MultiGameD2([[[2]], [[3]]])
        for subject in ('vposs', 'v-minmax'):
            with self.subTest(subject=subject):
                self.assertEqual(check_axiom('A0', subject, game).verdict, Verdict.HOLDS)

    def test_zero_map_only_at_zero(self):
        self.assertEqual(check_axiom('A0', 'h0', ScalarGame([[0]])).verdict, Verdict.HOLDS)
        report = check_axiom('A0', 'h0', ScalarGame([[5]]))
        self.assertEqual(report.verdict, Verdict.FAILS)
        self.assertTrue(replay_witness(report))

    def test_larger_games_are_rejected(self):
        with self.assertRaises(DimensionError):
            check_axiom('A0', 'val', independence_matrix())


class InstanceErrorTests(SimpleTestCase):

    def test_consistency_needs_two_criteria(self):
        with self.assertRaises(DimensionError):
            check_axiom('A6', 'val', independence_matrix())
        with self.assertRaises(DimensionError):
            check_axiom('A6', 'vposs', MultiGameD2([[[1, 2]]]))

    def test_linear_consistency_needs_equal_columns(self):
        with self.assertRaises(DimensionError):
            check_axiom('A7', 'vposs', duopoly())

    def test_minimax_amalgamation_needs_two_criteria(self):
        with self.assertRaises(DimensionError):
            check_axiom('A6', 'v-minmax', MultiGameD1([[[1, 0]], [[0, 1]], [[1, 1]]]))

    def test_pinned_weight_inside_the_interval(self):
        with self.assertRaises(WeightError):
            check_axiom('A7', 'vposs', AxiomInstance(crossed_units_d2(), alpha=1))

    def test_line_must_be_dominated(self):
        with self.assertRaises(DimensionError):
            check_axiom('A2', 'val', AxiomInstance(independence_matrix(), line=(9, 9)))
        with self.assertRaises(DimensionError):
            check_axiom('A4', 'val', AxiomInstance(independence_matrix(), line=(1, 1)))

    def test_monotonicity_needs_a_lower_game(self):
        b = independence_matrix()
        with self.assertRaises(DimensionError):
            check_axiom('A1', 'val', AxiomInstance(b, other=b.shifted(1)))
        with self.assertRaises(DimensionError):
            check_axiom('A1', 'val', AxiomInstance(b))


class SecurityMembershipTests(SimpleTestCase):

    def test_duopoly(self):
        self.assertTrue(poss_member(duopoly(), (0, HALF), [HALF, HALF]))
        self.assertFalse(poss_member(duopoly(), (HALF, Fraction(3, 4)), [HALF, HALF]))


class InvarianceSuiteTests(SimpleTestCase):

    def test_dominated_column_in_second_class_games(self):
        rng = random.Random(8)
        for _ in range(25):
            game = factories.d2_game(rng, max_k=2, max_n=3)
            criterion = rng.randrange(game.k)
            line = factories.dominated_column(rng, game.criterion(criterion))
            instance = AxiomInstance(game, criterion=criterion, line=line)
            with self.subTest(game=repr(game)):
                self.assertEqual(check_axiom('A2', 'vposs', instance, SWEEP_16).verdict, Verdict.HOLDS)

    def test_dominated_column_in_first_class_games(self):
        rng = random.Random(9)
        for _ in range(25):
            game = factories.d1_game(rng, max_k=2, max_n=3)
            weights = factories.strategy(rng, game.n)
            line = [factories.dominated_column(rng, a, weights) for a in game.matrices]
            with self.subTest(game=repr(game)):
                report = check_axiom('A2', 'v-minmax', AxiomInstance(game, line=line), SWEEP_16)
                self.assertEqual(report.verdict, Verdict.HOLDS)

    def test_dominated_row(self):
        rng = random.Random(10)
        for subject, make in (('vposs', factories.d2_game), ('v-minmax', factories.d1_game)):
            for _ in range(25):
                game = make(rng, max_k=2, max_n=3)
                weights = factories.strategy(rng, game.m)
                line = [factories.dominated_row(rng, a, weights) for a in game.matrices]
                with self.subTest(subject=subject, game=repr(game)):
                    report = check_axiom('A4', subject, AxiomInstance(game, line=line), SWEEP_16)
                    self.assertEqual(report.verdict, Verdict.HOLDS)

    def test_lowered_games(self):
        rng = random.Random(11)
        for subject, make in (('vposs', factories.d2_game), ('v-minmax', factories.d1_game)):
            for _ in range(25):
                game = make(rng, max_k=2, max_n=3)
                other = game.shifted([-factories.positive_shift(rng) for _ in range(game.k)])
                with self.subTest(subject=subject, game=repr(game)):
                    report = check_axiom('A1', subject, AxiomInstance(game, other=other), SWEEP_16)
                    self.assertEqual(report.verdict, Verdict.HOLDS)

    def test_tied_minimax_point_reached_in_both_games(self):
        instance = AxiomInstance(crossed_units_d1(), line=((HALF,), (HALF,)))
        report = check_axiom('A2', 'v-minmax', instance)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertIn(['1/2', '1/2'], report.witness['reached_in_the_other_game'])

    def test_first_entry_map_ignores_dominated_columns(self):
        rng = random.Random(12)
        for _ in range(20):
            b = factories.scalar_game(rng)
            line = factories.dominated_column(rng, b)
            self.assertEqual(check_axiom('A2', 'h1', AxiomInstance(b, line=line)).verdict, Verdict.HOLDS)


class EliminationSuiteTests(SimpleTestCase):
    """Removing a strictly dominated line leaves the swept sets as they were."""

    def test_dominated_column_removed_in_first_class_games(self):
        rng = random.Random(13)
        for _ in range(25):
            game = factories.d1_game(rng, max_k=2, max_n=3)
            weights = factories.strategy(rng, game.n)
            extended = game.with_column([factories.dominated_column(rng, a, weights) for a in game.matrices])
            with self.subTest(game=repr(extended)):
                report = check_axiom('A3', 'v-minmax', AxiomInstance(extended, index=game.n), SWEEP_16)
                self.assertEqual(report.verdict, Verdict.HOLDS)

    def test_dominated_row_removed_in_second_class_games(self):
        rng = random.Random(14)
        for _ in range(25):
            game = factories.d2_game(rng, max_k=2, max_n=3)
            weights = factories.strategy(rng, game.m)
            extended = game.with_row([factories.dominated_row(rng, a, weights) for a in game.matrices])
            with self.subTest(game=repr(extended)):
                report = check_axiom('A5', 'vposs', AxiomInstance(extended, index=game.m), SWEEP_16)
                self.assertEqual(report.verdict, Verdict.HOLDS)


class ConsistencySuiteTests(SimpleTestCase):

    def test_security_consistency_on_the_duopoly(self):
        report = check_axiom('A6', 'vposs', duopoly(), SWEEP_16)
        self.assertEqual(report.verdict, Verdict.HOLDS)
        self.assertTrue(report.witness['mixing_weights'])

    def test_security_consistency_on_random_games(self):
        rng = random.Random(13)
        for _ in range(10):
            game = factories.d2_game(rng, max_m=2, max_n=3, k=2)
            with self.subTest(game=repr(game)):
                self.assertEqual(check_axiom('A6', 'vposs', game, SWEEP_16).verdict, Verdict.HOLDS)

    def test_minimax_linear_consistency_on_random_games(self):
        rng = random.Random(14)
        for _ in range(10):
            game = factories.d1_game(rng, max_m=2, max_n=3)
            with self.subTest(game=repr(game)):
                self.assertEqual(check_axiom('A7', 'v-minmax', game, SWEEP_16).verdict, Verdict.HOLDS)


class IndependenceTableTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.table = independence_table()

    def test_evaluation_maps(self):
        self.assertEqual(
            self.table.row('h0'),
            {'A0': 'fails', 'A1': 'holds', 'A3': 'holds', 'A4': 'holds', 'A5': 'holds'},
        )
        self.assertEqual(self.table.row('h1'), {'A2': 'holds', 'A3': 'fails', 'A5': 'fails'})
        self.assertEqual(self.table.row('h2'), {'A3': 'fails', 'A5': 'holds'})

    def test_value_satisfies_the_single_criterion_axioms(self):
        self.assertEqual(set(self.table.row('val').values()), {'holds'})
        self.assertEqual(len(self.table.row('val')), 6)

    def test_multicriteria_counterexamples(self):
        self.assertEqual(self.table.row('v-minmax'), {'A6': 'fails'})
        self.assertEqual(self.table.row('vposs'), {'A7': 'fails'})

    def test_every_failure_replays(self):
        for report in self.table.reports:
            if report.fails:
                with self.subTest(subject=report.subject, axiom=report.axiom):
                    self.assertTrue(replay_witness(report))

    def test_external_cells(self):
        self.assertEqual({cell['verdict'] for cell in self.table.external}, {EXTERNAL})
