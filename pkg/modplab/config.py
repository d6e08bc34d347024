"""Runtime configuration for modplab."""

import os
from typing import ClassVar, Optional

from pydantic import BaseModel, Field

from .exceptions import ParameterError

SCHEMA_VERSION = "1.0"
BUDGET_ENV_VAR = "MODP_LAB_BUDGET"


class LabConfig(BaseModel):
    """Tunables shared by the enumeration engines and the CLI."""

    DEFAULT_INSTANCE_BUDGET: ClassVar[int] = 10**7
    DEFAULT_CLOSURE_CAP: ClassVar[int] = 10**6
    DEFAULT_INTERTWINER_SEARCH_CAP: ClassVar[int] = 10**5

    instance_budget: int = Field(
        default=DEFAULT_INSTANCE_BUDGET,
        ge=1,
        description="Maximum candidate representations per (p, type)",
    )
    closure_cap: int = Field(
        default=DEFAULT_CLOSURE_CAP,
        ge=1,
        description="Maximum group order built by closure",
    )
    intertwiner_search_cap: int = Field(
        default=DEFAULT_INTERTWINER_SEARCH_CAP,
        ge=1,
        description="Maximum combinations tried for an invertible intertwiner",
    )
    workers: int = Field(
        default_factory=lambda: os.cpu_count() or 1,
        ge=1,
        description="Worker processes for sharded verification",
    )

    @classmethod
    def from_env(
        cls, budget: Optional[int] = None, workers: Optional[int] = None
    ) -> "LabConfig":
        """
        Build a config from defaults, the environment and explicit overrides.

        Args:
            budget: Instance budget; takes precedence over MODP_LAB_BUDGET
            workers: Worker count; defaults to available parallelism

        Returns:
            The resolved LabConfig

        Raises:
            ParameterError: If MODP_LAB_BUDGET is not a positive integer
        """
        values = {}
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw is not None:
            try:
                values["instance_budget"] = int(raw)
            except ValueError as e:
                raise ParameterError(
                    f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}"
                ) from e
        if budget is not None:
            values["instance_budget"] = budget
        if workers is not None:
            values["workers"] = workers
        if values.get("instance_budget", 1) < 1 or values.get("workers", 1) < 1:
            raise ParameterError("budget and workers must be positive")
        return cls(**values)
