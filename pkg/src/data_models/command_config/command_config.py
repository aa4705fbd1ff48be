from dataclasses import field
from pathlib import Path
from typing import Literal

from pydantic import Field, model_validator
from pydantic.dataclasses import dataclass
from typing_extensions import Self

Command = Literal[
    "check", "embed", "decide-succ", "tc", "identity-formula", "activated", "simulate"
]


@dataclass
class CommandConfig:
    """
    Options shared by every command.
    - `command`: the subcommand to run.
    - `inputs`: files the command reads. They must exist.
    - `output`: optional file the command writes.
    - `format`: `human` or `json` output.
    - `verbosity`: number of `-v` flags, or -1 for `-q`.
    """

    command: Command
    inputs: list[str] = field(default_factory=list)
    output: str | None = None
    format: Literal["human", "json"] = "human"
    verbosity: int = Field(default=0, ge=-1)

    @model_validator(mode="after")
    def check_inputs(self) -> Self:
        missing = [path for path in self.inputs if not Path(path).is_file()]
        if missing:
            raise ValueError(f"input files not found: {', '.join(missing)}")
        return self
