"""
Diagram module for QuantumLinks
Slice diagrams, braids, validation, moves and the slice file format
"""

from diagram.model import (
    Arrow,
    Generator,
    Boundary,
    Slice,
    SliceDiagram,
    DiagramStats,
    apply_slice,
    boundaries,
    boundary_text,
    parse_boundary,
    crossing_sign,
)
from diagram.trace import Trace, TracedStrand, trace, validate, diagram_stats
from diagram.braid import (
    BraidWord,
    parse_braid,
    braid_closure,
    braid_diagram,
    braid_permutation,
    braid_cycles,
)
from diagram.moves import (
    MoveKind,
    MoveSpec,
    apply_move,
    applicable_moves,
    add_curl,
    mirror,
    disjoint_union,
    compose,
    orient_upward,
)
from diagram.cut import cut_open
from diagram.serialize import serialize, deserialize, parse_input, parse_braid_line
from diagram.generators import random_braid, random_moves

__all__ = [
    # Model
    'Arrow',
    'Generator',
    'Boundary',
    'Slice',
    'SliceDiagram',
    'DiagramStats',
    'apply_slice',
    'boundaries',
    'boundary_text',
    'parse_boundary',
    'crossing_sign',

    # Tracing
    'Trace',
    'TracedStrand',
    'trace',
    'validate',
    'diagram_stats',

    # Braids
    'BraidWord',
    'parse_braid',
    'braid_closure',
    'braid_diagram',
    'braid_permutation',
    'braid_cycles',

    # Moves
    'MoveKind',
    'MoveSpec',
    'apply_move',
    'applicable_moves',
    'add_curl',
    'mirror',
    'disjoint_union',
    'compose',
    'orient_upward',
    'cut_open',

    # File format
    'serialize',
    'deserialize',
    'parse_input',
    'parse_braid_line',

    # Generators
    'random_braid',
    'random_moves',
]
