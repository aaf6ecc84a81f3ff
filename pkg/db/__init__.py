"""
Async result cache for QuantumLinks.
"""

from typing import Optional

from db.engine import init_engine, close_engine, get_engine, get_database_url
from db.session import DatabaseSessionManager, session_manager
from db.models import Base, InvariantRecord
from db.crud import get_cached_result, save_result, list_results


async def init_db(url: Optional[str] = None):
    """Initialize database engine and session manager, creating the tables"""
    engine = await init_engine(url)
    session_manager.init()

    async with engine.begin() as conn:
        await conn.run_sync(Base.metadata.create_all)

    return engine


async def shutdown_db():
    session_manager.reset()
    await close_engine()


__all__ = [
    # Engine
    "init_engine",
    "close_engine",
    "get_engine",
    "get_database_url",
    "init_db",
    "shutdown_db",

    # Session
    "DatabaseSessionManager",
    "session_manager",

    # Models
    "Base",
    "InvariantRecord",

    # CRUD
    "get_cached_result",
    "save_result",
    "list_results",
]
