"""
Async database engine for the optional result cache.
"""

import logging
from typing import Optional

from sqlalchemy import text
from sqlalchemy.ext.asyncio import AsyncEngine, create_async_engine

from config import config

logger = logging.getLogger(__name__)

_engine: Optional[AsyncEngine] = None


def get_database_url(url: Optional[str] = None) -> str:
    """Cache URL with its async driver; --cache wins over DATABASE_URL"""
    url = url if url is not None else config.DATABASE_URL
    if not url:
        raise RuntimeError("No database URL configured. Set DATABASE_URL or pass --cache.")
    if url.startswith("sqlite:///"):
        return url.replace("sqlite:///", "sqlite+aiosqlite:///", 1)
    return url.replace("postgresql://", "postgresql+asyncpg://", 1)


async def init_engine(url: Optional[str] = None) -> AsyncEngine:
    """Initialize the async engine; SQLite files run in WAL mode."""
    global _engine
    if _engine is not None:
        return _engine

    db_url = get_database_url(url)
    _engine = create_async_engine(db_url, echo=config.DEBUG, pool_pre_ping=True)

    if db_url.startswith("sqlite"):
        async with _engine.begin() as conn:
            await conn.execute(text("PRAGMA journal_mode=WAL"))

    logger.info(f"Result cache engine initialized for {db_url.split(':', 1)[0]}")
    return _engine


async def close_engine():
    """Dispose of the cache engine; safe to call twice"""
    global _engine
    if _engine is None:
        return
    await _engine.dispose()
    _engine = None
    logger.info("Result cache engine closed")


def get_engine() -> AsyncEngine:
    """The live cache engine"""
    if _engine is None:
        raise RuntimeError("Database engine not initialized. Call init_engine() first.")
    return _engine
