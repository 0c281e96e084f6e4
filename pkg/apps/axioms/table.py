"""Pairwise independence of the axioms, reproduced on pinned instances."""
import logging
from dataclasses import dataclass
from fractions import Fraction

from apps.games.catalog import crossed_units_d1, crossed_units_d2, independence_matrix
from apps.games.matrices import ScalarGame

from .checks import AxiomInstance, check_axiom

logger = logging.getLogger(__name__)

EXTERNAL = 'external, not implemented'

# maps whose independence witnesses come from cited work
EXTERNAL_CELLS = (
    {'subject': 'f4', 'axioms': 'A0-A7', 'verdict': EXTERNAL},
    {'subject': 'f6', 'axioms': 'A0-A7', 'verdict': EXTERNAL},
)


@dataclass(frozen=True)
class IndependenceTable:
    reports: tuple
    external: tuple = EXTERNAL_CELLS

    def row(self, subject):
        return {r.axiom.value: r.verdict.value for r in self.reports if r.subject.value == subject}


def pinned_instances():
    """(subject, axiom, instance) triples; B = [[3, 5], [2, 7]]."""
    b = independence_matrix()
    singleton = AxiomInstance(ScalarGame([[5]]), description='1x1 game z = (5)')
    lowered = AxiomInstance(b, other=b.shifted(-1), description='B - 1 against B')
    extra_column = AxiomInstance(b, line=(1, 1), description='B with column (1, 1) appended')
    extra_row = AxiomInstance(b, line=(4, 6), description='B with row (4, 6) appended')
    first_column_gone = AxiomInstance(b, index=0, description='B without column 1')
    first_row_gone = AxiomInstance(b, index=0, description='B without row 1')

    triples = [
        ('h0', 'A0', singleton),
        ('h0', 'A1', lowered),
        ('h0', 'A3', first_column_gone),
        ('h0', 'A4', extra_row),
        ('h0', 'A5', first_row_gone),
        ('h1', 'A2', extra_column),
        ('h1', 'A3', first_column_gone),
        ('h1', 'A5', first_row_gone),
        ('h2', 'A3', first_column_gone),
        ('h2', 'A5', first_row_gone),
    ]
    # the scalar value satisfies A0-A5 on the same instances
    for axiom, instance in (
        ('A0', singleton),
        ('A1', lowered),
        ('A2', extra_column),
        ('A3', first_column_gone),
        ('A4', extra_row),
        ('A5', first_row_gone),
    ):
        triples.append(('val', axiom, instance))
    triples += [
        ('v-minmax', 'A6', AxiomInstance(
            crossed_units_d1(), description='first-class game A(1) = (1, 0), A(2) = (0, 1)',
        )),
        ('vposs', 'A7', AxiomInstance(
            crossed_units_d2(), alpha=Fraction(3, 4),
            description='second-class game A(1) = (1, 0), A(2) = (0, 1), mixing weight 3/4',
        )),
    ]
    return triples


def independence_table(cfg=None) -> IndependenceTable:
    reports = tuple(
        check_axiom(axiom, subject, instance, cfg) for subject, axiom, instance in pinned_instances()
    )
    logger.info(f'Independence table: {len(reports)} checked cells, {len(EXTERNAL_CELLS)} external')
    return IndependenceTable(reports=reports)
