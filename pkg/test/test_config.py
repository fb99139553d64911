import pytest

import nsr
from nsr import config

logger = nsr._logger.getLogger("nsr")

pytestmark = [pytest.mark.unit]


def test_defaults_are_loaded():
    assert config.get("version") == 1
    assert config.get("sampling.retries") == 20
    assert config.get("series.max-order") == 16


def test_set_and_restore():
    old = config.get("sampling.bound")
    config.set("sampling.bound", 7)
    try:
        assert config.get("sampling.bound") == 7
    finally:
        config.set("sampling.bound", old)


def test_max_order_honors_the_environment(monkeypatch):
    monkeypatch.delenv("NSR_MAX_DEGREE", raising=False)
    assert config.max_order() == 16
    monkeypatch.setenv("NSR_MAX_DEGREE", "5")
    assert config.max_order() == 5
    monkeypatch.setenv("NSR_MAX_DEGREE", "99")
    assert config.max_order() == 16
