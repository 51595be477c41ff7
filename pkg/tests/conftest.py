import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ppforge",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ppforge"))


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    # keep the CLI value cache out of the user's home
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path / "xdg"))
