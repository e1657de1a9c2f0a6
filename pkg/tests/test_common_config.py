import os
import pytest

import nttkern.common.config as config

DEFAULT_PATH = os.path.join(os.path.dirname(__file__),
                            os.pardir, "data", "master_config.yaml")


@pytest.mark.skipif(not all([os.path.exists(DEFAULT_PATH)]),
                    reason="Config doesn't exist")
def test_load():
    primary_config = config.Config.load(DEFAULT_PATH)
    assert bool(primary_config)
    assert primary_config["verify/samples"] == 1000000
    assert primary_config["contracts/enabled"] is True


@pytest.mark.parametrize("key,expected", [
    ("key1", "value1"),
    ("foo", "bar"),
    ("key2", 10),
])
def test_load_config_simple(key, expected):
    c = config.Config({"key1": "value1", "foo": "bar", "key2": 10})
    assert c[key] == expected


@pytest.mark.parametrize("key,expected", [
    ("key1a/key1b/key1c", "value1"),
    ("key1a/key2b", 42),
    ("foo", "bar"),
    ("key2", {"key2b": "ornot2b"}),
    ("key2/key2b", "ornot2b"),
    ("key2/missing", None),
    ("missing/key", None),
])
def test_load_config_hierarchical(key, expected):
    c = config.Config({
        "key1a": {"key1b": {"key1c": "value1"}, "key2b": 42},
        "foo": "bar",
        "key2": {"key2b": "ornot2b"}
    })
    assert c[key] == expected


def test_contains():
    c = config.Config({"a": {"b": None}})
    assert "a/b" in c
    assert "a/c" not in c


def test_with_overrides_skips_none():
    c = config.Config({"bench": {"iterations": 10, "warmup": 2}})
    c2 = c.with_overrides({"bench/iterations": 5, "bench/warmup": None,
                           "run/format": "json"})
    assert c2["bench/iterations"] == 5
    assert c2["bench/warmup"] == 2
    assert c2["run/format"] == "json"
    # The original is untouched.
    assert c["bench/iterations"] == 10
    assert "run/format" not in c


def test_resolve_seed(monkeypatch):
    c = config.Config({"run": {"seed": 11}})
    assert c.resolve_seed() == 11
    assert c.resolve_seed(5) == 5
    monkeypatch.setenv(config.SEED_ENV_VAR, "99")
    assert c.resolve_seed(5) == 99


def test_integration_config_is_small(integration_config):
    assert integration_config["verify/samples"] < 1000
    assert integration_config["counterexample/budget"] > 0
