"""
Game files: JSON documents validated with DRF serializers.

    {"class": "d2", "m": 2, "k": 2, "n_vec": [2, 3],
     "matrices": [[["0", "-1"], ["1", "0"]], [["-2", "0", "1/2"], ["-1", "0", "1"]]],
     "name": "duopoly", "description": "..."}

Entries are ints, "p/q" strings or decimals; JSON decimals are read as text,
so 0.5 is exactly 1/2. See docs/GAME_FILE_FORMAT.md.
"""
import json
import logging
from dataclasses import dataclass

from rest_framework import serializers
from rest_framework.renderers import JSONRenderer
from rest_framework.settings import api_settings

from .exceptions import DimensionError, ParseError
from .matrices import MultiGameD1, MultiGameD2, ScalarGame
from .rationals import render, to_rational

logger = logging.getLogger(__name__)

GAME_CLASSES = {
    'scalar': ScalarGame,
    'd1': MultiGameD1,
    'd2': MultiGameD2,
}


@dataclass(frozen=True)
class GameFile:
    game: object
    name: str = ''
    description: str = ''


class RationalField(serializers.Field):
    """Exact rational number; written back as "p" or "p/q"."""

    default_error_messages = {
        'invalid': 'A rational number ("p", "p/q" or a decimal) is required.',
    }

    def to_internal_value(self, data):
        if isinstance(data, bool):
            self.fail('invalid')
        try:
            return to_rational(data)
        except (TypeError, ValueError, ZeroDivisionError):
            self.fail('invalid')

    def to_representation(self, value):
        return render(value)


def _matrix_field():
    row = serializers.ListField(child=RationalField(), allow_empty=False)
    return serializers.ListField(child=row, allow_empty=False)


class GameFileSerializer(serializers.Serializer):
    """
    Validates a game document and builds the game object.

    Shape problems are raised with the 'dimension' code so callers can tell
    them apart from malformed fields.
    """
    game_class = serializers.ChoiceField(choices=sorted(GAME_CLASSES))
    m = serializers.IntegerField(min_value=1)
    k = serializers.IntegerField(min_value=1, required=False)
    n = serializers.IntegerField(min_value=1, required=False)
    n_vec = serializers.ListField(
        child=serializers.IntegerField(min_value=1), allow_empty=False, required=False
    )
    matrices = serializers.ListField(child=_matrix_field(), allow_empty=False)
    name = serializers.CharField(required=False, allow_blank=True, default='')
    description = serializers.CharField(required=False, allow_blank=True, default='')

    def get_fields(self):
        # "class" is a keyword, so the field is declared as game_class
        fields = super().get_fields()
        game_class = fields.pop('game_class')
        game_class.source = 'game_class'
        return {'class': game_class, **fields}

    def validate(self, attrs):
        game_class = attrs['game_class']
        matrices = attrs['matrices']
        m = attrs['m']

        if game_class == 'scalar' and len(matrices) != 1:
            self._dimension(f'a scalar game has one matrix, got {len(matrices)}')
        if 'k' in attrs and attrs['k'] != len(matrices):
            self._dimension(f'k = {attrs["k"]} but {len(matrices)} matrices are given')

        widths = []
        for index, matrix in enumerate(matrices, start=1):
            if len(matrix) != m:
                self._dimension(f'matrix {index} has {len(matrix)} rows, m = {m}')
            row_widths = {len(row) for row in matrix}
            if len(row_widths) != 1:
                self._dimension(f'matrix {index} has rows of different lengths')
            widths.append(row_widths.pop())

        if game_class in ('scalar', 'd1'):
            if len(set(widths)) != 1:
                self._dimension(f'column counts {widths} differ in a {game_class} game')
            if 'n' in attrs and attrs['n'] != widths[0]:
                self._dimension(f'n = {attrs["n"]} but the matrices have {widths[0]} columns')
        elif 'n_vec' in attrs and list(attrs['n_vec']) != widths:
            self._dimension(f'n_vec = {list(attrs["n_vec"])} but the matrices have {widths} columns')

        if game_class == 'scalar':
            attrs['game'] = ScalarGame(matrices[0])
        else:
            attrs['game'] = GAME_CLASSES[game_class](matrices)
        return attrs

    @staticmethod
    def _dimension(message):
        raise serializers.ValidationError(message, code='dimension')


def _flatten(errors, path=''):
    """(field path, ErrorDetail) pairs, with list positions as [i]."""
    if isinstance(errors, dict):
        for key, value in errors.items():
            if key == api_settings.NON_FIELD_ERRORS_KEY:
                sub = path
            elif isinstance(key, int):
                sub = f'{path}[{key}]'
            else:
                sub = f'{path}.{key}' if path else key
            yield from _flatten(value, sub)
    elif isinstance(errors, list):
        for index, value in enumerate(errors):
            if isinstance(value, (dict, list)):
                yield from _flatten(value, f'{path}[{index}]')
            else:
                yield path, value
    else:
        yield path, errors


def load_game(document) -> GameFile:
    """Validate an already decoded document."""
    if not isinstance(document, dict):
        raise ParseError('a game file holds one JSON object')
    serializer = GameFileSerializer(data=document)
    if not serializer.is_valid():
        problems = list(_flatten(serializer.errors))
        for path, detail in problems:
            if getattr(detail, 'code', None) == 'dimension':
                raise DimensionError(str(detail))
        path, detail = problems[0]
        raise ParseError(str(detail), field=path or None)
    data = serializer.validated_data
    return GameFile(game=data['game'], name=data['name'], description=data['description'])


def read_game_file(path) -> GameFile:
    try:
        with open(path, encoding='utf-8') as fh:
            document = json.load(fh, parse_float=str)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno)
    except UnicodeDecodeError as e:
        raise ParseError(f'{path} is not UTF-8 text: byte {e.object[e.start]:#04x} at offset {e.start}')
    except OSError as e:
        raise ParseError(f'cannot read {path}: {e.strerror}')
    game_file = load_game(document)
    logger.debug(f'Read {game_file.game!r} from {path}')
    return game_file


def parse_game(path):
    return read_game_file(path).game


def game_document(game, name='', description=''):
    """The game file document for a game, in serializer field order."""
    instance = {
        'game_class': game.game_class,
        'm': game.m,
        'k': game.k,
        'matrices': [a.rows() for a in game.matrices],
        'name': name,
        'description': description,
    }
    if isinstance(game, MultiGameD2):
        instance['n_vec'] = list(game.n_vec)
    else:
        instance['n'] = game.n
    return GameFileSerializer(instance).data


def emit_game(game, name='', description=''):
    """UTF-8 JSON bytes; parse_game reads them back to an equal game."""
    return JSONRenderer().render(
        game_document(game, name, description), renderer_context={'indent': 2}
    )
