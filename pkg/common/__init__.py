"""
Common module for QuantumLinks
Shared exceptions, decorators, metrics and helpers
"""

from common.exceptions import (
    QuantumLinkError,
    ParseError,
    IndexOutOfRange,
    MalformedDiagram,
    PatternMismatch,
    ComponentNotFound,
    IncompatibleJob,
    DivisionByZero,
    NotDivisible,
    StrandMismatch,
    PoleAtOne,
    NonScalarEndomorphism,
    InconsistentNormalization,
    CrossEngineMismatch,
)
from common.decorators import log_function_call, timed, cache_result
from common.metrics import MetricsCollector, metrics
from common.helpers import hash_string, format_seconds
from common.constants import (
    APP_INFO,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_COMPUTATION,
    EXIT_MISMATCH,
    LOG_FORMAT,
    LOG_LEVELS,
)

__all__ = [
    # Exceptions
    'QuantumLinkError',
    'ParseError',
    'IndexOutOfRange',
    'MalformedDiagram',
    'PatternMismatch',
    'ComponentNotFound',
    'IncompatibleJob',
    'DivisionByZero',
    'NotDivisible',
    'StrandMismatch',
    'PoleAtOne',
    'NonScalarEndomorphism',
    'InconsistentNormalization',
    'CrossEngineMismatch',

    # Decorators
    'log_function_call',
    'timed',
    'cache_result',

    # Metrics
    'MetricsCollector',
    'metrics',

    # Helpers
    'hash_string',
    'format_seconds',

    # Constants
    'APP_INFO',
    'EXIT_OK',
    'EXIT_USAGE',
    'EXIT_COMPUTATION',
    'EXIT_MISMATCH',
    'LOG_FORMAT',
    'LOG_LEVELS',
]
