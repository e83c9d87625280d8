import pytest
from loguru import logger

from src.config import Settings
from src.shared.logger import LogContext, get_context, log_call


@pytest.fixture
def records():
    captured = []
    handler = logger.add(lambda message: captured.append(message.record), level="DEBUG")
    yield captured
    logger.remove(handler)


def test_caps_follow_environment(monkeypatch):
    monkeypatch.setenv("BDCSP_BRUTE_FORCE_CAP", "10")
    monkeypatch.setenv("BDCSP_LOG_LEVEL", "DEBUG")
    settings = Settings(_env_file=None)
    assert settings.caps["brute_force"] == 10
    assert settings.LOG_LEVEL == "DEBUG"
    assert settings.LOG_DIR is None


def test_invalid_worker_count(monkeypatch):
    monkeypatch.setenv("BDCSP_SWEEP_WORKERS", "0")
    with pytest.raises(ValueError):
        Settings(_env_file=None)


def test_context_is_restored(records):
    with LogContext(run_id="abc12345", stage="copy"):
        logger.info("inside")
        assert get_context() == {"run_id": "abc12345", "stage": "copy"}
    assert get_context()["run_id"] != "abc12345"
    assert records[-1]["extra"]["stage"] == "copy"


async def test_log_call_reports_failures(records):
    @log_call()
    async def broken():
        raise RuntimeError("boom")

    with pytest.raises(RuntimeError):
        await broken()
    assert records[-1]["level"].name == "WARNING"
    assert "FAILED" in records[-1]["message"]
