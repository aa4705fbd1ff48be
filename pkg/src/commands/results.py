import json
from dataclasses import dataclass, field
from typing import Any, Literal

OutputFormat = Literal["human", "json"]

# Exit status of a command that decided its question negatively
FALSE_EXIT_CODE = 1


@dataclass
class CommandResult:
    """What a command prints, in both output formats, and its exit status"""

    text: str
    data: dict[str, Any] = field(default_factory=dict)
    exit_code: int = 0

    def render(self, output_format: OutputFormat) -> str:
        if output_format == "json":
            return json.dumps(self.data, indent=2, sort_keys=True)
        return self.text


def decided(
    answer: bool, data: dict[str, Any], words: tuple[str, str] = ("true", "false")
) -> CommandResult:
    """Result of a decision, exiting with 'FALSE_EXIT_CODE' when the answer is negative"""
    return CommandResult(
        text=words[0] if answer else words[1],
        data={"answer": answer, **data},
        exit_code=0 if answer else FALSE_EXIT_CODE,
    )
