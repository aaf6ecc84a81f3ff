#!/usr/bin/env python3
"""
QuantumLinks - Main entry point
"""

import logging
import sys

from common import LOG_FORMAT
from config import config

logging.basicConfig(
    format=LOG_FORMAT,
    level=logging.DEBUG if config.DEBUG else config.LOG_LEVEL,
)
logger = logging.getLogger(__name__)


def main():
    """Synchronous main entry point"""
    from cli import run

    try:
        code = run(sys.argv[1:])
    except KeyboardInterrupt:
        logger.info("Stopped by user")
        code = 130
    sys.exit(code)


if __name__ == "__main__":
    main()
