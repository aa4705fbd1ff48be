from .configs_loader import (
    AtomNamesConfig,
    FriendlyLogConfig,
    JsonLogConfig,
    LimitsConfig,
    SimulationConfig,
    configs,
)

__all__ = [
    "AtomNamesConfig",
    "configs",
    "FriendlyLogConfig",
    "JsonLogConfig",
    "LimitsConfig",
    "SimulationConfig",
]
