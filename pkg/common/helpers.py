"""
Common helper functions
"""

import hashlib


def hash_string(text: str) -> str:
    """Create hash of string"""
    return hashlib.sha256(text.encode()).hexdigest()


def format_seconds(seconds: float) -> str:
    """Format a duration for reports"""
    if seconds < 1.0:
        return f"{seconds * 1000:.1f} ms"
    return f"{seconds:.2f} s"
