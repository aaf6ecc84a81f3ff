"""
Configuration and enums for QuantumLinks
Exact link invariants from skein, Reshetikhin-Turaev and ladder engines
"""

import os
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

# ============================================================================
# LOAD .ENV FILE
# ============================================================================

def load_env_file():
    """Load environment variables from .env file"""
    env_path = Path(__file__).parent / ".env"
    if env_path.exists():
        with open(env_path, "r") as f:
            for line in f:
                line = line.strip()
                if line and not line.startswith("#") and "=" in line:
                    key, value = line.split("=", 1)
                    if key not in os.environ:
                        os.environ[key] = value

load_env_file()

# ============================================================================
# ENVIRONMENT CONFIGURATION
# ============================================================================

def _flag(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() == "true"


@dataclass
class Config:
    """Main configuration class"""
    DEBUG: bool = _flag("DEBUG", "false")
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "WARNING").upper()
    DATABASE_URL: str = os.getenv("DATABASE_URL", "")

    SKEIN_MEMO: bool = _flag("SKEIN_MEMO", "true")
    SKEIN_WORKERS: int = int(os.getenv("SKEIN_WORKERS", "1"))

    RANDOM_SEED: int = int(os.getenv("RANDOM_SEED", "20240229"))
    SELFTEST_CASES: int = int(os.getenv("SELFTEST_CASES", "200"))

config = Config()

# ============================================================================
# ENUMS
# ============================================================================

class InvariantKind(str, Enum):
    HOMFLY = "homfly"
    JONES = "jones"
    SLN = "sln"
    ALEXANDER = "alexander"
    GLMN = "glmn"

class EngineKind(str, Enum):
    SKEIN = "skein"
    RT = "rt"
    SCHUR = "schur"
    ALL = "all"

class FramingMode(str, Enum):
    FRAMED = "framed"
    NORMALIZED = "normalized"
