import argparse
import sys

from django.core.management.base import BaseCommand, CommandError

from apps.axioms.checks import Axiom, Subject
from apps.games.exceptions import (
    DimensionError,
    ParseError,
    SizeError,
    SolverError,
    StrategyError,
    WeightError,
)
from apps.games.rationals import to_rational
from apps.games.reports import COMMANDS, GAMELESS, RunOptions, run_command
from apps.games.serializers import read_game_file

USAGE_ERROR = 1
INPUT_ERROR = 2
SOLVER_ERROR = 3
AXIOM_FAILED = 4


def rational_list(text):
    """Parse "1/2,1/2" into (Fraction(1, 2), Fraction(1, 2))."""
    try:
        return tuple(to_rational(part) for part in text.split(','))
    except (TypeError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f'expected comma-separated rationals, got {text!r}')


def rational_rows(text):
    """Parse "1,0;0,1" into one tuple per criterion."""
    return tuple(rational_list(part) for part in text.split(';'))


class Command(BaseCommand):
    help = 'Solve multicriteria matrix games and check the consistency axioms'

    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        # argument errors become CommandError (exit code 1) instead of argparse's exit 2
        parser.called_from_command_line = False
        return parser

    def run_from_argv(self, argv):
        try:
            super().run_from_argv(argv)
        except CommandError as e:
            self.stderr.write(f'{e.__class__.__name__}: {e}')
            sys.exit(e.returncode)

    def add_arguments(self, parser):
        parser.add_argument('command', choices=COMMANDS, help='What to compute')
        parser.add_argument('game', nargs='?', help='Path to a game file (JSON)')
        parser.add_argument('--grid', type=int, help='Weight grid resolution r (default: per k)')
        parser.add_argument('--x-grid', type=int, help='Oracle x-grid resolution')
        parser.add_argument('--y-grid', type=int, help='Oracle y-grid resolution')
        parser.add_argument(
            '--ties',
            action=argparse.BooleanOptionalAction,
            default=True,
            help='Enumerate tied optimal vertices (default: on)'
        )
        parser.add_argument('--tie-cap', type=int, help='Maximum optimal vertices per LP')
        parser.add_argument('--size-cap', type=int, help='Maximum product of column counts')
        parser.add_argument('--format', choices=('text', 'structured'), default='text')
        parser.add_argument(
            '--fail-on-axiom-violation',
            action='store_true',
            help='Exit with code 4 when check-axiom reports "fails"'
        )
        parser.add_argument('--alpha', type=rational_list, help='Weights a1,a2,... (or one mixing weight for A6/A7)')
        parser.add_argument('--x', type=rational_list, help='Row strategy for security')
        parser.add_argument('--weights', type=rational_list, help='Weights for amalgamate')
        parser.add_argument('--axiom', choices=[a.value for a in Axiom])
        parser.add_argument('--subject', choices=[s.value for s in Subject])
        parser.add_argument('--other', help='Second game file (A1)')
        parser.add_argument('--criterion', type=int, help='Criterion for column operations, 1-based')
        parser.add_argument('--index', type=int, help='Removed row or column, 1-based')
        parser.add_argument('--line', type=rational_rows, help='Appended row/column, "r1;r2" per criterion')
        parser.add_argument('--player', choices=('I', 'II'), default='I')
        parser.add_argument('--face-samples', type=int, default=0)
        parser.add_argument('--decimals', action='store_true', help='Add decimal renderings')

    def handle(self, *args, **options):
        command = options['command']
        if command not in GAMELESS and not options['game']:
            raise CommandError(f'{command} needs a game file', returncode=USAGE_ERROR)

        try:
            game_file = None if command in GAMELESS else read_game_file(options['game'])
            other = read_game_file(options['other']).game if options['other'] else None
            run_options = RunOptions(
                grid=options['grid'],
                x_grid=options['x_grid'],
                y_grid=options['y_grid'],
                ties=options['ties'],
                tie_cap=options['tie_cap'],
                size_cap=options['size_cap'],
                alpha=options['alpha'],
                x=options['x'],
                weights=options['weights'],
                axiom=options['axiom'],
                subject=options['subject'],
                other=other,
                criterion=options['criterion'],
                index=options['index'],
                line=options['line'],
                player=options['player'],
                face_samples=options['face_samples'],
                decimals=options['decimals'],
            )
            report = run_command(command, game_file, run_options)
        except (ParseError, DimensionError, WeightError, StrategyError, SizeError) as e:
            raise CommandError(str(e), returncode=INPUT_ERROR)
        except SolverError as e:
            raise CommandError(str(e), returncode=SOLVER_ERROR)

        if options['format'] == 'structured':
            self.stdout.write(report.structured(), ending='')
        else:
            self.stdout.write(report.text, ending='')

        if report.failed_axiom and options['fail_on_axiom_violation']:
            raise CommandError(f'{options["axiom"]} fails for {options["subject"]}', returncode=AXIOM_FAILED)
