"""
Hecke module for QuantumLinks
Permutations, the Hecke algebra H_N, antisymmetrizers and Schur-Weyl duality
"""

from hecke.perm import Perm, all_perms
from hecke.algebra import (
    HeckeElem,
    antisymmetrizer,
    braid_to_hecke,
    hecke_inverse_generator,
    hecke_mul,
    hecke_pow,
    symmetric_group_specialize,
)
from hecke.schur_weyl import schur_weyl_rep, span_rank

__all__ = [
    # Permutations
    'Perm',
    'all_perms',

    # Algebra
    'HeckeElem',
    'antisymmetrizer',
    'braid_to_hecke',
    'hecke_inverse_generator',
    'hecke_mul',
    'hecke_pow',
    'symmetric_group_specialize',

    # Schur-Weyl
    'schur_weyl_rep',
    'span_rank',
]
