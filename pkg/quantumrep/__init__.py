"""
Quantum representation module for QuantumLinks
U_q(gl(m|n)) on V and V*, Reshetikhin-Turaev matrices and the gl(1|1) Alexander value
"""

from quantumrep.matrix import RepMatrix, SuperBasisIndex, SuperSpace, Word
from quantumrep.qgroup import (
    Gen,
    GenKind,
    QGroupData,
    RelationCheck,
    RelationReport,
    V,
    V_DUAL,
    E,
    F,
    K,
    K_inv,
    L,
    build_qgroup,
    check_relations,
    dual_action,
    intertwines,
)
from quantumrep.generators import RTGenerators, cap_coefficient, cup_coefficient, r_matrix, rt_generators
from quantumrep.functor import alexander_rt, eval_tangle_rt, rt_closed

__all__ = [
    # Matrices
    'RepMatrix',
    'SuperBasisIndex',
    'SuperSpace',
    'Word',

    # Quantum group
    'Gen',
    'GenKind',
    'QGroupData',
    'RelationCheck',
    'RelationReport',
    'V',
    'V_DUAL',
    'E',
    'F',
    'K',
    'K_inv',
    'L',
    'build_qgroup',
    'check_relations',
    'dual_action',
    'intertwines',

    # RT functor
    'RTGenerators',
    'cap_coefficient',
    'cup_coefficient',
    'r_matrix',
    'rt_generators',
    'alexander_rt',
    'eval_tangle_rt',
    'rt_closed',
]
