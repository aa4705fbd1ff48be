import pydantic
import pytest

import configs.configs_loader as configs_loader


def _build(**overrides) -> configs_loader.Configs:
    return configs_loader.Configs(**{**configs_loader.loaded_configs, **overrides})


def test_configs_loaded():
    """'configs' should hold the values of the configuration file"""
    loaded = configs_loader.loaded_configs

    assert configs_loader.configs.atom_names.lam == loaded["atom_names"]["lam"]
    assert configs_loader.configs.simulation.default_horizon == (
        loaded["simulation"]["default_horizon"]
    )
    assert configs_loader.configs.output_format in ("human", "json")


@pytest.mark.parametrize(
    "logging, expected",
    [
        ({"mode": "friendly", "format": "%(message)s"}, configs_loader.FriendlyLogConfig),
        ({"mode": "json", "fields": {"level": "levelname"}}, configs_loader.JsonLogConfig),
        ({"mode": "json"}, configs_loader.JsonLogConfig),
    ],
)
def test_configs_logging_mode(logging, expected):
    """'Configs' should pick the logging configuration from its 'mode'"""
    assert isinstance(_build(logging=logging).logging, expected)


@pytest.mark.parametrize(
    "overrides",
    [
        {"logging": {"mode": "xml"}},
        {"output_format": "yaml"},
        {"simulation": {"default_horizon": 0}},
        {
            "limits": {
                "tautology_max_variables": 16,
                "partition_max_atoms": -1,
                "godel_pool_max_height": 8,
                "brute_force_max_tuples": 1000,
            }
        },
    ],
)
def test_configs_invalid(overrides):
    """'Configs' should reject unknown logging modes and output formats and limits that are not
    positive"""
    with pytest.raises(pydantic.ValidationError):
        _build(**overrides)
