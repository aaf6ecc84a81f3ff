"""
SQLAlchemy models for the result cache
Tables: invariant_results
"""

from datetime import datetime

from sqlalchemy import Boolean, Column, DateTime, Index, Integer, String, Text
from sqlalchemy.orm import declarative_base

Base = declarative_base()


class InvariantRecord(Base):
    __tablename__ = "invariant_results"

    id = Column(Integer, primary_key=True, autoincrement=True)

    # sha256 of the serialized slice diagram
    digest = Column(String(64), nullable=False)
    invariant = Column(String(32), nullable=False)
    engine = Column(String(16), nullable=False)
    framing = Column(String(16), nullable=False)
    reduced = Column(Boolean, default=False, nullable=False)

    value = Column(Text, nullable=False)
    crossings = Column(Integer, nullable=True)
    elapsed = Column(String(32), nullable=True)

    created_at = Column(DateTime, default=datetime.utcnow)

    __table_args__ = (
        Index("ix_results_lookup", "digest", "invariant", "engine", "framing", "reduced", unique=True),
    )

    def __repr__(self) -> str:
        return f"<InvariantRecord {self.invariant}/{self.engine} {self.digest[:8]}>"
