"""
Skein module for QuantumLinks
Descending-algorithm evaluation of oriented framed tangles
"""

from skein.gauss import (
    Arc,
    GaussCode,
    Matching,
    canonical_key,
    first_violation,
    from_trace,
    identity_matching,
    simplify,
    smooth,
    switch,
)
from skein.evaluator import SkeinEvaluator, SkeinSum, skein_sum_to_ground
from skein.invariants import (
    ReducedVariant,
    eval_closed,
    eval_tangle,
    framing_normalize,
    homfly,
    jones,
    reduced,
    reduced_by_cut,
    rt_sln,
)

__all__ = [
    # Gauss codes
    'Arc',
    'GaussCode',
    'Matching',
    'canonical_key',
    'first_violation',
    'from_trace',
    'identity_matching',
    'simplify',
    'smooth',
    'switch',

    # Evaluator
    'SkeinEvaluator',
    'SkeinSum',
    'skein_sum_to_ground',

    # Invariants
    'ReducedVariant',
    'eval_closed',
    'eval_tangle',
    'framing_normalize',
    'homfly',
    'jones',
    'reduced',
    'reduced_by_cut',
    'rt_sln',
]
