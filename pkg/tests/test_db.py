import pytest

from config import EngineKind, InvariantKind
from db import (
    InvariantRecord,
    get_cached_result,
    get_database_url,
    get_engine,
    init_db,
    list_results,
    save_result,
    session_manager,
    shutdown_db,
)
from services import InvariantSpec, Job, run_job_cached

DIGEST = "ab" * 32


@pytest.fixture
async def cache(tmp_path):
    url = f"sqlite:///{tmp_path / 'results.db'}"
    await init_db(url)
    yield url
    await shutdown_db()


# ============================================================================
# ENGINE
# ============================================================================

def test_database_url_conversion():
    assert get_database_url("sqlite:///x.db") == "sqlite+aiosqlite:///x.db"
    assert get_database_url("postgresql://h/db") == "postgresql+asyncpg://h/db"
    with pytest.raises(RuntimeError):
        get_database_url("")


async def test_engine_requires_init():
    await shutdown_db()
    with pytest.raises(RuntimeError):
        get_engine()
    with pytest.raises(RuntimeError, match="init_db"):
        async with session_manager.session():
            pass


# ============================================================================
# CRUD
# ============================================================================

async def test_save_and_lookup(cache):
    assert await get_cached_result(DIGEST, "jones", "skein", "framed") is None
    record = await save_result(DIGEST, "jones", "skein", "framed", False, "q + q^-1", crossings=3)
    assert record.id is not None
    assert await get_cached_result(DIGEST, "jones", "skein", "framed") == "q + q^-1"
    assert await get_cached_result(DIGEST, "jones", "skein", "framed", reduced=True) is None
    assert await get_cached_result(DIGEST, "jones", "rt", "framed") is None


async def test_save_overwrites(cache):
    await save_result(DIGEST, "sln 3", "rt", "framed", False, "1")
    await save_result(DIGEST, "sln 3", "rt", "framed", False, "2")
    assert await get_cached_result(DIGEST, "sln 3", "rt", "framed") == "2"
    assert len(await list_results()) == 1


async def test_list_results(cache):
    await save_result(DIGEST, "jones", "skein", "framed", False, "a")
    await save_result(DIGEST, "homfly", "skein", "framed", False, "b")
    await save_result("cd" * 32, "jones", "rt", "normalized", True, "c")
    records = await list_results()
    assert [r.value for r in records] == ["c", "b", "a"]
    assert [r.value for r in await list_results(invariant="jones")] == ["c", "a"]
    assert len(await list_results(limit=1)) == 1


async def test_session_rolls_back(cache):
    with pytest.raises(ValueError):
        async with session_manager.session() as session:
            session.add(InvariantRecord(
                digest=DIGEST, invariant="jones", engine="skein", framing="framed", reduced=False, value="x",
            ))
            await session.flush()
            raise ValueError("abort")
    assert await list_results() == []


# ============================================================================
# CACHED JOBS
# ============================================================================

async def test_cached_job(cache, trefoil):
    job = Job(trefoil, InvariantSpec.jones(), EngineKind.ALL)
    first = await run_job_cached(job)
    second = await run_job_cached(job)
    assert [r.text for r in second.results] == [r.text for r in first.results]
    assert all(r.elapsed == 0.0 for r in second.results)
    assert len(await list_results()) == 3
    assert second.lines()[0] == "skein: -q^3 + q^-1 + q^-3 + q^-5"


async def test_cached_homfly_round_trip(cache, hopf):
    job = Job(hopf, InvariantSpec(InvariantKind.HOMFLY))
    first = await run_job_cached(job)
    second = await run_job_cached(job)
    assert second.results[0].value == first.results[0].value
