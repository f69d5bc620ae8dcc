from typing import Literal, Tuple

from pydantic import BaseModel, Field, field_validator

from tabkit.exception import ConfigError
from tabkit.utils.env import read_from_env, read_int_from_env, read_pair_from_env


class TabkitConfig(BaseModel):
    """Run configuration shared by the CLI and the verification suites.

    Attributes:
        threads: Worker threads used to fan out verification cases.
        window: `(D, E)` caps on the negative-side degree and the [n]-degree.
        truncation: Default number of letters per side for builtin alphabets.
        output: Rendering of results on stdout.
        seed: Seed for randomized property cases.
    """

    threads: int = Field(default=1, description="Worker threads for verification fan-out.")
    window: Tuple[int, int] = Field(default=(2, 2), description="Degree caps (D, E).")
    truncation: int = Field(default=2, description="Letters per side for builtin alphabets.")
    output: Literal["json", "ascii"] = Field(default="json", description="Output format.")
    seed: int = Field(default=0, description="Seed for randomized suites.")

    @field_validator("threads", "truncation")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ConfigError(f"expected a positive integer, got {value}")
        return value

    @field_validator("window")
    @classmethod
    def _window(cls, value: Tuple[int, int]) -> Tuple[int, int]:
        if min(value) < 0:
            raise ConfigError(f"window caps must be non-negative, got {value}")
        return value

    @staticmethod
    def load_from_env_config() -> "TabkitConfig":
        """Loads the run configuration from `TABKIT_*` environment variables.

        Returns:
            An instance of TabkitConfig with unset values left at their defaults.
        """
        output = (read_from_env("TABKIT_OUTPUT") or "json").lower()
        if output not in ("json", "ascii"):
            raise ConfigError(f"TABKIT_OUTPUT must be json or ascii, got {output!r}")
        return TabkitConfig(
            threads=read_int_from_env("TABKIT_THREADS", 1),
            window=read_pair_from_env("TABKIT_WINDOW", (2, 2)),
            truncation=read_int_from_env("TABKIT_TRUNCATION", 2),
            output=output,
            seed=read_int_from_env("TABKIT_SEED", 0),
        )
