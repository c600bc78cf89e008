import pytest

from symcover.character_table import TableStore
from symcover.support import SupportCache


@pytest.fixture(scope="session")
def store():
    # no disk cache: tests must not touch the user's cache directory
    return TableStore(cache_dir=None)


@pytest.fixture(scope="session")
def caches(store):
    built = {}

    def get(n: int) -> SupportCache:
        if n not in built:
            built[n] = SupportCache(store.table(n))
        return built[n]

    return get
