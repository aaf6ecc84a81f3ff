"""
Async CRUD operations for the result cache.
"""

import logging
from typing import List, Optional

from sqlalchemy import select

from db.models import InvariantRecord
from db.session import session_manager

logger = logging.getLogger(__name__)


def _lookup(digest: str, invariant: str, engine: str, framing: str, reduced: bool):
    return select(InvariantRecord).where(
        InvariantRecord.digest == digest,
        InvariantRecord.invariant == invariant,
        InvariantRecord.engine == engine,
        InvariantRecord.framing == framing,
        InvariantRecord.reduced == reduced,
    )


async def get_cached_result(
    digest: str,
    invariant: str,
    engine: str,
    framing: str,
    reduced: bool = False,
) -> Optional[str]:
    """Rendered value of an earlier identical job, if any."""
    async with session_manager.session() as session:
        result = await session.execute(_lookup(digest, invariant, engine, framing, reduced))
        record = result.scalar_one_or_none()
        if record is None:
            logger.debug(f"cache miss {invariant}/{engine} {digest[:8]}")
            return None
        logger.debug(f"cache hit {invariant}/{engine} {digest[:8]}")
        return record.value


async def save_result(
    digest: str,
    invariant: str,
    engine: str,
    framing: str,
    reduced: bool,
    value: str,
    crossings: Optional[int] = None,
    elapsed: Optional[str] = None,
) -> InvariantRecord:
    """Store a rendered value; an existing row for the same job is overwritten."""
    async with session_manager.session() as session:
        result = await session.execute(_lookup(digest, invariant, engine, framing, reduced))
        record = result.scalar_one_or_none()
        if record is None:
            record = InvariantRecord(
                digest=digest,
                invariant=invariant,
                engine=engine,
                framing=framing,
                reduced=reduced,
                value=value,
            )
            session.add(record)
        else:
            record.value = value
        record.crossings = crossings
        record.elapsed = elapsed
        await session.flush()
        return record


async def list_results(limit: int = 50, invariant: Optional[str] = None) -> List[InvariantRecord]:
    """Most recent results first."""
    async with session_manager.session() as session:
        query = select(InvariantRecord)
        if invariant is not None:
            query = query.where(InvariantRecord.invariant == invariant)
        query = query.order_by(InvariantRecord.created_at.desc(), InvariantRecord.id.desc()).limit(limit)
        result = await session.execute(query)
        return list(result.scalars().all())
