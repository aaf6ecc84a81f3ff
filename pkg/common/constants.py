"""
Common constants and shared values
"""

APP_INFO = {
    "name": "QuantumLinks",
    "version": "1.0.0",
    "description": "Exact HOMFLY-PT, Reshetikhin-Turaev and Alexander invariants of framed links",
}

# CLI exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COMPUTATION = 2
EXIT_MISMATCH = 3

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

LOG_LEVELS = {
    "DEBUG": 10,
    "INFO": 20,
    "WARNING": 30,
    "ERROR": 40,
    "CRITICAL": 50,
}
