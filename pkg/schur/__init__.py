"""
Schur module for QuantumLinks
Quantum exterior powers, ladder generators, tangle-to-ladder compilation
"""

from schur.weight import LetterKind, SchurWeight
from schur.wedge import WedgeMap, WedgeSpace, build_wedge, merge, split, states
from schur.generators import (
    Normalization,
    box_map,
    local_generator,
    normalize,
    schur_crossing,
    schur_generator,
)
from schur.ladder import LadderLetter, LadderWord, eval_ladder
from schur.compile import (
    Calibration,
    calibrate,
    ladder_to_rep,
    schur_closed,
    swap_scalar,
    tangle_to_ladder,
)
from schur.karoubi import contingency_tables, karoubi_hom_dimension, weight_idempotent

__all__ = [
    # Weights
    'LetterKind',
    'SchurWeight',

    # Wedge spaces
    'WedgeMap',
    'WedgeSpace',
    'build_wedge',
    'merge',
    'split',
    'states',

    # Generators
    'Normalization',
    'box_map',
    'local_generator',
    'normalize',
    'schur_crossing',
    'schur_generator',

    # Ladders
    'LadderLetter',
    'LadderWord',
    'eval_ladder',
    'Calibration',
    'calibrate',
    'ladder_to_rep',
    'schur_closed',
    'swap_scalar',
    'tangle_to_ladder',

    # Hom spaces
    'contingency_tables',
    'karoubi_hom_dimension',
    'weight_idempotent',
]
