"""Exact rational scalars and the object-dtype numpy arrays that hold them."""
from decimal import Decimal
from fractions import Fraction
from numbers import Rational as _RationalABC

import numpy as np

from .exceptions import DimensionError

Rational = Fraction


def to_rational(value):
    """
    Convert a scalar to an exact Fraction.

    Accepts ints, Fractions, Decimals and strings ("3", "-1/2", "0.25").
    Floats are read through their shortest repr so 0.1 becomes 1/10.
    """
    if isinstance(value, bool):
        raise TypeError('booleans are not payoffs')
    if isinstance(value, Fraction):
        return value
    if isinstance(value, np.generic):
        return to_rational(value.item())
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError('empty string is not a rational')
        return Fraction(text)
    raise TypeError(f'cannot read {type(value).__name__} as a rational')


def render(value):
    """Canonical text form: "p" for integers, "p/q" otherwise."""
    value = to_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def render_decimal(value, places=6):
    value = to_rational(value)
    return f'{float(value):.{places}f}'


def as_vector(values):
    """1-D read-only object array of Fractions."""
    vector = np.array([to_rational(v) for v in values], dtype=object)
    if vector.ndim != 1:
        raise DimensionError('expected a flat vector')
    vector.flags.writeable = False
    return vector


def as_matrix(rows):
    """2-D read-only object array of Fractions; ragged input is a DimensionError."""
    if isinstance(rows, np.ndarray):
        rows = rows.tolist()
    rows = [list(row) for row in rows]
    if not rows or not rows[0]:
        raise DimensionError('a payoff matrix needs at least one row and one column')
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise DimensionError(f'row {i + 1} has {len(row)} entries, expected {width}')
    matrix = np.empty((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        for j, entry in enumerate(row):
            matrix[i, j] = to_rational(entry)
    matrix.flags.writeable = False
    return matrix
