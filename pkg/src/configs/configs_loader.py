import os
from typing import Literal

import yaml
from pydantic.dataclasses import dataclass
from pydantic.fields import Field


@dataclass
class FriendlyLogConfig:
    mode: Literal["friendly"]
    format: str | None = None


@dataclass
class JsonLogConfig:
    mode: Literal["json"]
    fields: dict[str, str] | None = None


@dataclass
class AtomNamesConfig:
    lam: str
    provability: str
    fefermanian: str
    axioms: str
    theta_prefix: str


@dataclass
class LimitsConfig:
    tautology_max_variables: int = Field(gt=0)
    partition_max_atoms: int = Field(gt=0)
    godel_pool_max_height: int = Field(gt=0)
    brute_force_max_tuples: int = Field(gt=0)


@dataclass
class SimulationConfig:
    default_horizon: int = Field(gt=0)


@dataclass
class Configs:
    atom_names: AtomNamesConfig
    limits: LimitsConfig
    simulation: SimulationConfig

    output_format: Literal["human", "json"]

    logging: FriendlyLogConfig | JsonLogConfig = Field(discriminator="mode")


with open(os.environ.get("CONFIGS_FILE", "configs/configs.yaml"), "r") as file:
    loaded_configs = yaml.load(file.read(), Loader=yaml.FullLoader)

configs = Configs(**loaded_configs)
