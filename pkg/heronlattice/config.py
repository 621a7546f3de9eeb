"""Run settings from defaults, a TOML file and the environment."""

from __future__ import annotations

import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Mapping, Optional

BUDGET_ENV = "HERON_BUDGET"
JOBS_ENV = "HERON_JOBS"


class ConfigValidationError(Exception):
    """Raised when settings fail validation."""


def _positive_int(name: str, value: Any) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError) as exc:
        raise ConfigValidationError(f"{name} must be an integer, got {value!r}") from exc
    if isinstance(value, bool) or number < 1:
        raise ConfigValidationError(f"{name} must be a positive integer, got {value!r}")
    return number


@dataclass(frozen=True)
class Settings:
    """Search settings.

    Attributes
    ----------
    budget
        Maximum node count of an exhaustive search; ``None`` means unlimited.
    jobs
        Number of worker processes for parallel searches.
    """

    budget: Optional[int] = None
    jobs: int = 1

    @staticmethod
    def from_mapping(data: Mapping[str, Any]) -> "Settings":
        """Create settings from a flat mapping or one with a ``heronlattice`` table.

        Raises
        ------
        ConfigValidationError
            On unknown keys or values that are not positive integers.
        """
        table = data.get("heronlattice", data)
        if not isinstance(table, Mapping):
            raise ConfigValidationError("heronlattice must be a table")
        unknown = set(table) - {"budget", "jobs"}
        if unknown:
            raise ConfigValidationError(f"Unknown settings: {sorted(unknown)}")
        budget = table.get("budget")
        return Settings(
            budget=None if budget is None else _positive_int("budget", budget),
            jobs=_positive_int("jobs", table.get("jobs", 1)),
        )

    @staticmethod
    def load(path: Path | str) -> "Settings":
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(path)
        if path.suffix.lower() != ".toml":
            raise ConfigValidationError("Settings files must be TOML (.toml)")
        return Settings.from_mapping(tomllib.loads(path.read_text(encoding="utf-8")))

    def with_env(self, environ: Mapping[str, str]) -> "Settings":
        """Override fields with ``HERON_BUDGET`` / ``HERON_JOBS`` when set."""
        updated = self
        if environ.get(BUDGET_ENV):
            updated = replace(updated, budget=_positive_int(BUDGET_ENV, environ[BUDGET_ENV]))
        if environ.get(JOBS_ENV):
            updated = replace(updated, jobs=_positive_int(JOBS_ENV, environ[JOBS_ENV]))
        return updated


def load_settings(
    path: Path | str | None = None, environ: Mapping[str, str] | None = None
) -> Settings:
    """Defaults, then the optional TOML file, then the environment."""
    settings = Settings.load(path) if path else Settings()
    return settings.with_env(os.environ if environ is None else environ)
