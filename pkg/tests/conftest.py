import pytest


@pytest.fixture(autouse=True, scope="session")
def _isolated_cache(tmp_path_factory):
    # keep the discriminant cache out of the user's home directory
    mp = pytest.MonkeyPatch()
    mp.setenv("CA_FORGE_CACHE", str(tmp_path_factory.mktemp("disc-cache")))
    yield
    mp.undo()
