import pytest

from tabkit.config import TabkitConfig
from tabkit.exception import ConfigError
from tabkit.utils.env import parse_pair, read_from_env, read_int_from_env

KEYS = ["TABKIT_THREADS", "TABKIT_WINDOW", "TABKIT_TRUNCATION", "TABKIT_OUTPUT", "TABKIT_SEED"]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in KEYS:
        monkeypatch.delenv(key, raising=False)


def test_defaults():
    config = TabkitConfig.load_from_env_config()
    assert config == TabkitConfig()
    assert config.threads == 1
    assert config.window == (2, 2)
    assert config.output == "json"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("TABKIT_THREADS", "4")
    monkeypatch.setenv("TABKIT_WINDOW", "3, 1")
    monkeypatch.setenv("TABKIT_OUTPUT", "ASCII")
    monkeypatch.setenv("TABKIT_SEED", "7")
    config = TabkitConfig.load_from_env_config()
    assert config.threads == 4
    assert config.window == (3, 1)
    assert config.output == "ascii"
    assert config.seed == 7


@pytest.mark.parametrize(
    "key, value",
    [
        ("TABKIT_THREADS", "many"),
        ("TABKIT_THREADS", "0"),
        ("TABKIT_TRUNCATION", "-2"),
        ("TABKIT_WINDOW", "1"),
        ("TABKIT_WINDOW", "1,-1"),
        ("TABKIT_OUTPUT", "xml"),
    ],
)
def test_bad_values(monkeypatch, key, value):
    monkeypatch.setenv(key, value)
    with pytest.raises(ConfigError):
        TabkitConfig.load_from_env_config()


def test_env_helpers(monkeypatch):
    assert read_from_env("TABKIT_SEED") is None
    with pytest.raises(ConfigError):
        read_from_env("TABKIT_SEED", raise_exception=True)
    monkeypatch.setenv("TABKIT_SEED", "  ")
    assert read_int_from_env("TABKIT_SEED", 5) == 5


def test_parse_pair():
    assert parse_pair("2,3") == (2, 3)
    with pytest.raises(ConfigError):
        parse_pair("2;3")
    with pytest.raises(ConfigError):
        parse_pair("a,b")
