"""
Exception hierarchy shared by every engine.

Engines raise these; only the CLI turns them into exit codes.
"""

from typing import Optional


class QuantumLinkError(Exception):
    """Base class for all errors raised by the invariant engines"""


# ============================================================================
# INPUT ERRORS
# ============================================================================

class ParseError(QuantumLinkError):
    """Malformed text input (polynomial, braid word or slice file)"""

    def __init__(self, message: str, position: Optional[int] = None, line: Optional[int] = None):
        self.message = message
        self.position = position
        self.line = line
        where = ""
        if line is not None:
            where = f" (line {line})"
        elif position is not None:
            where = f" (position {position})"
        super().__init__(f"{message}{where}")


class IndexOutOfRange(QuantumLinkError):
    """Braid generator index outside 1..n-1"""


class MalformedDiagram(QuantumLinkError):
    """Slice diagram whose boundary objects or orientations do not match"""

    def __init__(self, message: str, slice_index: Optional[int] = None):
        self.slice_index = slice_index
        where = f" at slice {slice_index}" if slice_index is not None else ""
        super().__init__(f"{message}{where}")


class PatternMismatch(QuantumLinkError):
    """A diagram move was requested where its pattern does not occur"""


class ComponentNotFound(QuantumLinkError):
    """Requested link component does not exist"""


class IncompatibleJob(QuantumLinkError):
    """Invariant and engine selections cannot be combined"""


# ============================================================================
# ALGEBRA ERRORS
# ============================================================================

class DivisionByZero(QuantumLinkError, ZeroDivisionError):
    """Inverse of zero requested in an exact ring"""


class NotDivisible(QuantumLinkError):
    """Exact division left a nonzero remainder"""


class StrandMismatch(QuantumLinkError):
    """Hecke elements on different strand counts were combined"""


class PoleAtOne(QuantumLinkError):
    """Coefficient has a pole at q = 1"""


class NonScalarEndomorphism(QuantumLinkError):
    """A (1,1)-tangle evaluated to a non-scalar matrix"""


class InconsistentNormalization(QuantumLinkError):
    """No ladder normalization satisfies the defining relations"""


class CrossEngineMismatch(QuantumLinkError):
    """Two engines produced different values for the same job"""

    def __init__(self, message: str, values: Optional[dict] = None):
        self.values = values or {}
        super().__init__(message)
