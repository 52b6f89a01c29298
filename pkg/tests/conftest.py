import pytest
from hypothesis import settings

from cm_degrees.orders import all_orders

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def small_orders():
    return all_orders(60)


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("CM_DEGREES_CACHE", str(tmp_path / "cache"))
