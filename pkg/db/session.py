"""
Async session management.
"""

from contextlib import asynccontextmanager
from typing import AsyncGenerator, Optional

from sqlalchemy.ext.asyncio import AsyncSession, async_sessionmaker

from db.engine import get_engine


class DatabaseSessionManager:
    """Hands out result-cache sessions bound to the current engine"""

    def __init__(self):
        self._sessionmaker: Optional[async_sessionmaker[AsyncSession]] = None

    def init(self):
        """Bind to the engine; init_engine must have run"""
        self._sessionmaker = async_sessionmaker(
            get_engine(), expire_on_commit=False, class_=AsyncSession
        )

    def reset(self):
        self._sessionmaker = None

    @property
    def ready(self) -> bool:
        return self._sessionmaker is not None

    @asynccontextmanager
    async def session(self) -> AsyncGenerator[AsyncSession, None]:
        """One unit of cache work: committed on exit, rolled back on error"""
        if self._sessionmaker is None:
            raise RuntimeError("Result cache not initialized. Call init_db() first.")

        session = self._sessionmaker()
        try:
            yield session
            await session.commit()
        except Exception:
            await session.rollback()
            raise
        finally:
            await session.close()


session_manager = DatabaseSessionManager()
